#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <vector>

#include "latd/rng.hpp"

using namespace latd;

TEST_CASE("identical keys give identical streams") {
  RngStream a = make_stream(42, StreamPurpose::kNoise, 3, 7);
  RngStream b = make_stream(42, StreamPurpose::kNoise, 3, 7);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("any key component separates streams") {
  RngStream base = make_stream(42, StreamPurpose::kNoise, 3, 7);
  const uint64_t first = base.next_u64();
  CHECK(make_stream(43, StreamPurpose::kNoise, 3, 7).next_u64() != first);
  CHECK(make_stream(42, StreamPurpose::kFading, 3, 7).next_u64() != first);
  CHECK(make_stream(42, StreamPurpose::kNoise, 4, 7).next_u64() != first);
  CHECK(make_stream(42, StreamPurpose::kNoise, 3, 8).next_u64() != first);
}

TEST_CASE("next_below stays in range and is close to uniform") {
  RngStream s = make_stream(1, StreamPurpose::kGeneric, 0, 0);
  const int trials = 200000;
  std::vector<int> buckets(10, 0);
  for (int i = 0; i < trials; ++i) {
    const uint64_t v = s.next_below(10);
    REQUIRE(v < 10);
    ++buckets[static_cast<int>(v)];
  }
  // each bucket ~ Binomial(2e5, 0.1); 5 sigma is about 670
  for (int count : buckets) CHECK(std::abs(count - trials / 10) < 700);
}

TEST_CASE("next_unit is in the half-open unit interval") {
  RngStream s = make_stream(2, StreamPurpose::kGeneric, 0, 0);
  double mean = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double u = s.next_unit();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    mean += u;
  }
  mean /= 100000;
  CHECK(std::abs(mean - 0.5) < 0.005);
}

TEST_CASE("gaussian moments") {
  RngStream s = make_stream(3, StreamPurpose::kGeneric, 0, 0);
  const int trials = 1000000;
  double sum = 0.0, sum2 = 0.0;
  for (int i = 0; i < trials; ++i) {
    const double g = s.next_gaussian();
    sum += g;
    sum2 += g * g;
  }
  const double mean = sum / trials;
  const double var = sum2 / trials - mean * mean;
  CHECK(std::abs(mean) < 0.005);
  CHECK(std::abs(var - 1.0) < 0.01);
}

TEST_CASE("exponential moments") {
  RngStream s = make_stream(4, StreamPurpose::kGeneric, 0, 0);
  const int trials = 1000000;
  double sum = 0.0, sum2 = 0.0;
  for (int i = 0; i < trials; ++i) {
    const double e = s.next_exponential();
    REQUIRE(e >= 0.0);
    sum += e;
    sum2 += e * e;
  }
  const double mean = sum / trials;
  CHECK(std::abs(mean - 1.0) < 0.01);
  CHECK(std::abs(sum2 / trials - 2.0) < 0.05);
}
