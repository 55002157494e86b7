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

#include "revsim/rng.hpp"

#include <doctest.h>

#include <fstream>
#include <set>
#include <vector>

#include <json.hpp>

#include "support/stats.hpp"

using namespace revsim;

TEST_CASE("derived streams reproduce the checked-in golden outputs") {
  std::ifstream in(std::string(REVSIM_GOLDEN_DIR) + "/rng_golden.json");
  REQUIRE(in.good());
  const auto fixture = nlohmann::json::parse(in);
  REQUIRE(fixture.at("scheme") == "splitmix64-derive/xoshiro256** v1");
  for (const auto& entry : fixture.at("cases")) {
    RngStream stream = RngStream::derive(entry.at("master_seed").get<std::uint64_t>(),
                                         entry.at("stream_index").get<std::uint64_t>());
    for (const auto& expected : entry.at("first_outputs")) {
      CHECK(stream.next_u64() == expected.get<std::uint64_t>());
    }
  }
}

TEST_CASE("identical (seed, index) pairs give identical sequences") {
  RngStream a = RngStream::derive(1234, 56);
  RngStream b = RngStream::derive(1234, 56);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("first outputs of derive(7, 0..9999) are all distinct") {
  std::set<std::uint64_t> outputs;
  for (std::uint64_t index = 0; index < 10000; ++index) {
    outputs.insert(RngStream::derive(7, index).next_u64());
  }
  CHECK(outputs.size() == 10000);
}

TEST_CASE("random_bitstring rejects out-of-range widths") {
  RngStream stream = RngStream::derive(0, 0);
  CHECK_THROWS_AS(random_bitstring(0, stream), std::invalid_argument);
  CHECK_THROWS_AS(random_bitstring(65, stream), std::invalid_argument);
  CHECK_THROWS_AS(random_bitstring(-3, stream), std::invalid_argument);
  CHECK(random_bitstring(64, stream).width() == 64);
}

TEST_CASE("width-1 draws are balanced to 3 sigma") {
  RngStream stream = RngStream::derive(11, 0);
  long long ones = 0;
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) ones += random_bitstring(1, stream).bits();
  const double fraction = static_cast<double>(ones) / draws;
  CHECK(fraction >= 0.495);
  CHECK(fraction <= 0.505);
}

TEST_CASE("width-20 popcount mean matches the binomial expectation") {
  RngStream stream = RngStream::derive(12, 0);
  long long total = 0;
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) total += random_bitstring(20, stream).popcount();
  const double mean = static_cast<double>(total) / draws;
  CHECK(mean >= 9.9);
  CHECK(mean <= 10.1);
}

TEST_CASE("fixed stream draws are reproduced exactly on re-derivation") {
  RngStream first = RngStream::derive(99, 3);
  const BitString a = random_bitstring(16, first);
  const BitString b = random_bitstring(16, first);
  RngStream second = RngStream::derive(99, 3);
  CHECK(random_bitstring(16, second) == a);
  CHECK(random_bitstring(16, second) == b);
}

TEST_CASE("width-4 draws pass a chi-square uniformity test at alpha 0.001") {
  RngStream stream = RngStream::derive(2026, 0);
  std::vector<long long> counts(16, 0);
  const long long draws = 100000;
  for (long long i = 0; i < draws; ++i) {
    counts[random_bitstring(4, stream).bits()] += 1;
  }
  // Critical value for chi-square with 15 degrees of freedom at 0.001.
  CHECK(revsim_tests::chi_square_uniform(counts, draws) < 37.697);
}

TEST_CASE("uniform_below is unbiased across a non-power-of-two range") {
  RngStream stream = RngStream::derive(5, 5);
  std::vector<long long> counts(7, 0);
  const long long draws = 70000;
  for (long long i = 0; i < draws; ++i) counts[stream.uniform_below(7)] += 1;
  // df = 6, alpha = 0.001.
  CHECK(revsim_tests::chi_square_uniform(counts, draws) < 22.458);
  CHECK_THROWS_AS(stream.uniform_below(0), std::invalid_argument);
  RngStream one = RngStream::derive(5, 6);
  for (int i = 0; i < 10; ++i) CHECK(one.uniform_below(1) == 0);
}

TEST_CASE("streams remember their origin") {
  RngStream stream = RngStream::derive(42, 17);
  CHECK(stream.master_seed() == 42);
  CHECK(stream.stream_index() == 17);
}

TEST_CASE("bitstring invariants") {
  CHECK_THROWS_AS(BitString(3, 0b1000), std::invalid_argument);
  CHECK_THROWS_AS(BitString(0, 0), std::invalid_argument);
  const BitString x(5, 0b10110);
  CHECK(x.to_binary() == "10110");
  CHECK(x.bit(1));
  CHECK_FALSE(x.bit(0));
  CHECK(x.with_bit_flipped(0).bits() == 0b10111);
  CHECK_THROWS_AS(x.bit(5), std::invalid_argument);
  CHECK(BitString(64, ~std::uint64_t{0}).popcount() == 64);
}
