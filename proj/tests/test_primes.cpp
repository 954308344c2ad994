#include <doctest.h>

#include <cmath>
#include <cstdint>

#include "seqchaos/errors.hpp"
#include "seqchaos/primes.hpp"

using namespace seqchaos;

TEST_CASE("sieve_primes small counts") {
  CHECK(sieve_primes(0).values.empty());
  CHECK(sieve_primes(1).values == std::vector<std::uint64_t>{2});
  CHECK(sieve_primes(4).values == std::vector<std::uint64_t>{2, 3, 5, 7});
}

TEST_CASE("trial_division_oracle small counts") {
  CHECK(trial_division_oracle(0).values.empty());
  CHECK(trial_division_oracle(1).values == std::vector<std::uint64_t>{2});
  CHECK(trial_division_oracle(5).values == std::vector<std::uint64_t>{2, 3, 5, 7, 11});
}

TEST_CASE("sieve matches the trial-division oracle for every n up to 1000 and at 10000") {
  const auto oracle = trial_division_oracle(10'000);
  for (std::size_t n = 0; n <= 1000; ++n) {
    const auto s = sieve_primes(n, {.segment_flags = 64, .threads = 1});
    REQUIRE(s.count() == n);
    CHECK(std::equal(s.values.begin(), s.values.end(), oracle.values.begin()));
  }
  CHECK(sieve_primes(10'000).values == oracle.values);
}

TEST_CASE("100000th prime agrees with the oracle") {
  // The oracle's 100000th prime, computed once by trial division: 1299709.
  const auto oracle = trial_division_oracle(100'000);
  REQUIRE(oracle.values.back() == 1'299'709);
  const auto s = sieve_primes(100'000);
  CHECK(s.count() == 100'000);
  CHECK(s.values.back() == oracle.values.back());
}

TEST_CASE("output does not depend on segment size or thread count") {
  const auto reference = sieve_primes(20'000, {.segment_flags = 1 << 15, .threads = 1});
  for (const std::size_t flags : {std::size_t{1}, std::size_t{7}, std::size_t{256}, std::size_t{1} << 12,
                                  std::size_t{1} << 18}) {
    for (const unsigned threads : {1u, 2u, 5u}) {
      CAPTURE(flags);
      CAPTURE(threads);
      CHECK(sieve_primes(20'000, {.segment_flags = flags, .threads = threads}) == reference);
    }
  }
}

TEST_CASE("prefix property and gap parity") {
  const auto big = sieve_primes(5'001);
  for (const std::size_t n : {1u, 2u, 17u, 600u, 5'000u}) {
    const auto s = sieve_primes(n);
    CHECK(std::equal(s.values.begin(), s.values.end(), big.values.begin()));
  }
  for (std::size_t k = 1; k + 1 < big.values.size(); ++k) {
    const auto gap = big.values[k + 1] - big.values[k];
    REQUIRE(gap >= 2);
    REQUIRE(gap % 2 == 0);
  }
}

TEST_CASE("every sieve element survives trial division") {
  const auto s = sieve_primes(3'000);
  for (std::size_t i = 1; i < s.values.size(); ++i) REQUIRE(s.values[i] > s.values[i - 1]);
  for (const auto p : s.values) {
    for (std::uint64_t d = 2; d * d <= p; ++d) REQUIRE(p % d != 0);
  }
}

TEST_CASE("upper bound covers the nth prime and growth path terminates") {
  const auto s = sieve_primes(20'000);
  for (std::size_t n = 1; n <= s.values.size(); n += 97) {
    CHECK(nth_prime_upper_bound(n) >= s.values[n - 1]);
  }
}

TEST_CASE("an undersized first bound grows until enough primes are found") {
  const auto reference = sieve_primes(5'000);
  for (const std::uint64_t bound : {std::uint64_t{3}, std::uint64_t{100}, std::uint64_t{40'000}}) {
    CAPTURE(bound);
    CHECK(sieve_primes(5'000, {.segment_flags = 512, .threads = 2, .initial_bound = bound}) == reference);
  }
}

TEST_CASE("capacity ceilings") {
  CHECK_THROWS_AS(sieve_primes(kMaxSieveCount + 1), CapacityExceeded);
  CHECK_THROWS_AS(trial_division_oracle(kMaxOracleCount + 1), CapacityExceeded);
}
