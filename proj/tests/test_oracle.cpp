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

#include "revsim/oracle.hpp"

#include <doctest.h>

#include <vector>

#include "revsim/errors.hpp"
#include "revsim/exceptions.hpp"

using namespace revsim;

TEST_CASE("exact probability fractions compare reduced") {
  CHECK(ExactProbability{64, 256} == ExactProbability{2, 8});
  CHECK(ExactProbability{0, 16} == ExactProbability{0, 1024});
  CHECK_FALSE(ExactProbability{3, 8} == ExactProbability{2, 8});
  CHECK(ExactProbability{1, 4}.value() == 0.25);
}

TEST_CASE("identical circuits have zero detection probability") {
  RngStream gen = RngStream::derive(41, 0);
  const Circuit circuit = random_circuit(8, 60, gen);
  CHECK(exact_detection_probability(circuit, circuit) == ExactProbability{0, 256});
}

TEST_CASE("a single injected NOT is detected by every input") {
  RngStream gen = RngStream::derive(41, 1);
  const Circuit ideal = random_circuit(8, 60, gen);
  RngStream err = RngStream::derive(41, 2);
  const auto plan = random_injection_plan(60, 8, 1, 1, err);
  const auto [corrupted, record] = inject(ideal, plan, err);
  CHECK(exact_detection_probability(ideal, corrupted) == ExactProbability{256, 256});
}

TEST_CASE("a single injected CCNOT is detected by a quarter of the window patterns") {
  RngStream gen = RngStream::derive(41, 3);
  const Circuit ideal = random_circuit(8, 60, gen);
  RngStream err = RngStream::derive(41, 4);
  const auto plan = random_injection_plan(60, 8, 1, 3, err);
  const auto [corrupted, record] = inject(ideal, plan, err);
  const auto probability = exact_detection_probability(ideal, corrupted);
  CHECK(probability == ExactProbability{64, 256});
  CHECK(probability == ExactProbability{2, 8});
}

TEST_CASE("detection probability depends only on the error, never the circuit") {
  RngStream stream = RngStream::derive(42, 0);
  for (int round = 0; round < 100; ++round) {
    const int n = 2 + static_cast<int>(stream.uniform_below(7));  // 2..8
    const int k = 1 + static_cast<int>(stream.uniform_below(static_cast<std::uint64_t>(n)));
    const int start =
        static_cast<int>(stream.uniform_below(static_cast<std::uint64_t>(n - k) + 1));
    const Circuit r1 = random_circuit(n, 20, stream);
    const Circuit r2 = random_circuit(n, 20, stream);
    const Circuit error = worst_case_error(n, k, start);

    const Circuit ideal = concat(r1, r2);
    const Circuit corrupted = concat(concat(r1, error), r2);
    const auto through = exact_detection_probability(ideal, corrupted);
    const auto bare = exact_detection_probability(Circuit(n), error);
    CHECK(through == bare);
    CHECK(through == ExactProbability{2, std::uint64_t{1} << k});
  }
}

TEST_CASE("worst-case errors hit the 2/2^k sharpness bound exactly") {
  for (int k = 1; k <= 6; ++k) {
    const Circuit error = worst_case_error(8, k, 1);
    CHECK(exact_detection_probability(Circuit(8), error) ==
          ExactProbability{2, std::uint64_t{1} << k});
  }
}

TEST_CASE("random errors are at least as detectable as the worst case") {
  RngStream stream = RngStream::derive(42, 1);
  for (int k = 1; k <= 6; ++k) {
    for (int round = 0; round < 50; ++round) {
      const Circuit error = random_error(k, k, 0, stream);
      const auto probability = exact_detection_probability(Circuit(k), error);
      // numerator / 2^k >= 2^-(k-1)
      CHECK(probability.numerator * (std::uint64_t{1} << (k - 1)) >=
            probability.denominator);
    }
  }
}

TEST_CASE("disjoint worst-case errors factorize the miss probability exactly") {
  for (int k = 1; k <= 6; ++k) {
    for (int l = 1; l * k <= 12; ++l) {
      const int n = l * k;
      std::vector<Gate> gates;
      for (int i = 0; i < l; ++i) {
        gates.push_back(worst_case_error(n, k, i * k).gates()[0]);
      }
      const auto probability =
          exact_detection_probability(Circuit(n), Circuit(n, std::move(gates)));
      // Misses = (2^k - 2)^l of the 2^(k*l) inputs.
      std::uint64_t misses = 1;
      for (int i = 0; i < l; ++i) misses *= (std::uint64_t{1} << k) - 2;
      CHECK(probability.denominator - probability.numerator == misses);
    }
  }
}

TEST_CASE("enumeration caps and width checks") {
  CHECK_THROWS_AS(exact_detection_probability(Circuit(21), Circuit(21)), CapacityError);
  CHECK_THROWS_AS(exact_detection_probability(Circuit(4), Circuit(5)),
                  std::invalid_argument);
}

TEST_CASE("count_fixed_points on simple tables") {
  CHECK(count_fixed_points(permutation_table(Circuit(4))) == 16);
  // A 2-controlled NOT moves exactly one pair: 8 - 2 fixed points.
  CHECK(count_fixed_points(permutation_table(worst_case_error(3, 3, 0))) == 6);
}

TEST_CASE("non-identity circuits fix at most 2^n - 2 inputs") {
  RngStream stream = RngStream::derive(42, 2);
  for (int round = 0; round < 30; ++round) {
    const int n = 2 + static_cast<int>(stream.uniform_below(9));  // 2..10
    const Circuit circuit = random_circuit(n, 5 * n, stream);
    const PermTable table = permutation_table(circuit);
    if (table.is_identity()) continue;
    CHECK(count_fixed_points(table) <= (1ll << n) - 2);
  }
}

TEST_CASE("worst_case_composition matches its closed-form probability") {
  const auto composition = worst_case_composition(6);
  CHECK(exact_detection_probability(composition.ideal, composition.corrupted) ==
        ExactProbability{4, 64});
  CHECK(support(composition.effective_error, Window{1, 5}).size() == 5);

  // corrupted == effective_error after ideal, on every input.
  const Circuit rewritten = concat(composition.ideal, composition.effective_error);
  for (std::uint64_t x = 0; x < 64; ++x) {
    CHECK(simulate_raw(composition.corrupted, x) == simulate_raw(rewritten, x));
  }
}

TEST_CASE("the two-line composition is detected by every input") {
  const auto composition = worst_case_composition(2);
  CHECK(exact_detection_probability(composition.ideal, composition.corrupted) ==
        ExactProbability{4, 4});
  CHECK_THROWS_AS(worst_case_composition(1), std::invalid_argument);
}

TEST_CASE("composition probability scales as 4/2^n") {
  for (int n = 3; n <= 10; ++n) {
    const auto composition = worst_case_composition(n);
    CHECK(exact_detection_probability(composition.ideal, composition.corrupted) ==
          ExactProbability{4, std::uint64_t{1} << n});
  }
}

TEST_CASE("cascade demo counts for every wire position") {
  // No flip: nothing to detect.
  CHECK(and_cascade_demo(std::nullopt).detecting_inputs == 0);

  // Flip on a first-row AND output: the 4/256 masking showcase.
  for (int index = 0; index < 4; ++index) {
    const auto count = and_cascade_demo(FlipWire{1, index});
    CHECK(count.detecting_inputs == 4);
    CHECK(count.total == 256);
  }

  // Input wires: only the two settings of the other input pair line matter.
  CHECK(and_cascade_demo(FlipWire{0, 3}).detecting_inputs == 2);
  // Second row: 16 inputs see it.
  CHECK(and_cascade_demo(FlipWire{2, 0}).detecting_inputs == 16);
  // Output wire: everything flips.
  CHECK(and_cascade_demo(FlipWire{3, 0}).detecting_inputs == 256);
}

TEST_CASE("cascade demo rejects wires outside the tree") {
  CHECK_THROWS_AS(and_cascade_demo(FlipWire{4, 0}), std::invalid_argument);
  CHECK_THROWS_AS(and_cascade_demo(FlipWire{1, 4}), std::invalid_argument);
  CHECK_THROWS_AS(and_cascade_demo(FlipWire{-1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(and_cascade_demo(FlipWire{0, 8}), std::invalid_argument);
}
