// Copyright 2026 The revsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Test-only statistics helpers, independent of the library under test.

#ifndef REVSIM_TESTS_SUPPORT_STATS_HPP
#define REVSIM_TESTS_SUPPORT_STATS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace revsim_tests {

inline double mean_of(std::span<const long long> samples) {
  long double sum = 0;
  for (long long value : samples) sum += static_cast<long double>(value);
  return static_cast<double>(sum / static_cast<long double>(samples.size()));
}

/// Pearson chi-square statistic against a uniform law over `bins` categories.
inline double chi_square_uniform(std::span<const long long> counts, long long total) {
  const double expected = static_cast<double>(total) / static_cast<double>(counts.size());
  double stat = 0.0;
  for (long long count : counts) {
    const double diff = static_cast<double>(count) - expected;
    stat += diff * diff / expected;
  }
  return stat;
}

/// Two-sample Kolmogorov-Smirnov distance: max |F1 - F2| over the pooled
/// sample points.
inline double ks_distance(std::vector<long long> a, std::vector<long long> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double inv_a = 1.0 / static_cast<double>(a.size());
  const double inv_b = 1.0 / static_cast<double>(b.size());
  double distance = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    const long long x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] == x) ++i;
    while (j < b.size() && b[j] == x) ++j;
    distance = std::max(distance,
                        std::abs(static_cast<double>(i) * inv_a -
                                 static_cast<double>(j) * inv_b));
  }
  return distance;
}

/// Critical KS distance at significance alpha for sample sizes m and n:
/// c(alpha) * sqrt((m + n) / (m * n)) with c(alpha) = sqrt(-ln(alpha/2) / 2).
inline double ks_critical(double alpha, std::size_t m, std::size_t n) {
  const double c = std::sqrt(-std::log(alpha / 2.0) / 2.0);
  return c * std::sqrt(static_cast<double>(m + n) /
                       (static_cast<double>(m) * static_cast<double>(n)));
}

/// Lower empirical quantile (q in [0, 1]) of a sorted copy of the samples.
inline long long quantile(std::vector<long long> samples, double q) {
  std::sort(samples.begin(), samples.end());
  const auto index = static_cast<std::size_t>(
      q * static_cast<double>(samples.size() - 1) + 0.5);
  return samples[std::min(index, samples.size() - 1)];
}

}  // namespace revsim_tests

#endif  // REVSIM_TESTS_SUPPORT_STATS_HPP
