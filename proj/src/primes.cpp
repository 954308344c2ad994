#include "seqchaos/primes.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>

#include "seqchaos/errors.hpp"

namespace seqchaos {

namespace {

// Plain sieve of Eratosthenes for the base primes up to `limit` (inclusive), odd only.
std::vector<std::uint32_t> base_primes_up_to(std::uint64_t limit) {
  std::vector<std::uint32_t> primes;
  if (limit < 3) return primes;
  const std::size_t n = static_cast<std::size_t>((limit - 1) / 2);  // flags for 3, 5, ..., limit
  std::vector<bool> composite(n + 1, false);
  for (std::size_t i = 1; i <= n; ++i) {
    if (composite[i]) continue;
    const std::uint64_t p = 2 * i + 1;
    primes.push_back(static_cast<std::uint32_t>(p));
    for (std::uint64_t m = p * p; m <= limit; m += 2 * p) composite[(m - 1) / 2] = true;
  }
  return primes;
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Sieves the odd numbers lo, lo + 2, ..., < hi (lo odd) and returns the primes found.
std::vector<std::uint64_t> sieve_segment(std::uint64_t lo, std::uint64_t hi,
                                         const std::vector<std::uint32_t>& base) {
  const std::size_t flags = static_cast<std::size_t>((hi - lo + 1) / 2);
  std::vector<std::uint8_t> composite(flags, 0);
  for (const std::uint64_t p : base) {
    const std::uint64_t sq = p * p;
    if (sq >= hi) break;
    std::uint64_t start = sq;
    if (start < lo) {
      start = (lo + p - 1) / p * p;
      if (start % 2 == 0) start += p;
    }
    for (std::uint64_t m = start; m < hi; m += 2 * p) composite[(m - lo) / 2] = 1;
  }
  std::vector<std::uint64_t> found;
  for (std::size_t i = 0; i < flags; ++i) {
    if (!composite[i]) found.push_back(lo + 2 * i);
  }
  return found;
}

}  // namespace

unsigned default_thread_count() {
  if (const char* env = std::getenv("SEQCHAOS_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::uint64_t nth_prime_upper_bound(std::size_t n) {
  static constexpr std::array<std::uint64_t, 6> kSmall{0, 2, 3, 5, 7, 11};
  if (n < kSmall.size()) return kSmall[n];
  const double x = static_cast<double>(n);
  return static_cast<std::uint64_t>(std::ceil(x * (std::log(x) + std::log(std::log(x)))));
}

PrimeSequence sieve_primes(std::size_t count, const SieveOptions& options) {
  if (count > kMaxSieveCount) throw CapacityExceeded("sieve_primes", count, kMaxSieveCount);
  PrimeSequence out;
  if (count == 0) return out;
  out.values.reserve(count);
  out.values.push_back(2);

  const std::uint64_t segment_span = 2 * std::max<std::size_t>(options.segment_flags, 1);
  const unsigned threads = options.threads ? options.threads : default_thread_count();

  std::uint64_t bound = options.initial_bound ? options.initial_bound : nth_prime_upper_bound(count);
  std::uint64_t next = 3;  // first odd number not yet sieved
  while (out.values.size() < count) {
    const auto base = base_primes_up_to(isqrt(bound) + 1);
    while (out.values.size() < count && next <= bound) {
      // One batch of up to `threads` consecutive segments, merged in order.
      std::vector<std::uint64_t> starts;
      for (std::uint64_t lo = next; starts.size() < threads && lo <= bound; lo += segment_span) {
        starts.push_back(lo);
      }
      std::vector<std::vector<std::uint64_t>> found(starts.size());
      auto work = [&](std::size_t i) {
        const std::uint64_t hi = std::min(starts[i] + segment_span, bound + 1);
        found[i] = sieve_segment(starts[i], hi, base);
      };
      if (starts.size() == 1) {
        work(0);
      } else {
        std::vector<std::jthread> pool;
        for (std::size_t i = 0; i < starts.size(); ++i) pool.emplace_back(work, i);
      }
      for (const auto& f : found) {
        for (const std::uint64_t p : f) {
          if (out.values.size() == count) break;
          out.values.push_back(p);
        }
      }
      next = std::min(starts.back() + segment_span, bound + 1);
      if (next % 2 == 0) ++next;
    }
    if (out.values.size() < count) bound += bound / 4 + 1;
  }
  return out;
}

PrimeSequence trial_division_oracle(std::size_t count) {
  if (count > kMaxOracleCount) {
    throw CapacityExceeded("trial_division_oracle", count, kMaxOracleCount);
  }
  PrimeSequence out;
  out.values.reserve(count);
  for (std::uint64_t candidate = 2; out.values.size() < count; ++candidate) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= candidate; ++d) {
      if (candidate % d == 0) {
        prime = false;
        break;
      }
    }
    if (prime) out.values.push_back(candidate);
  }
  return out;
}

}  // namespace seqchaos
