#ifndef SEQCHAOS_PRIMES_HPP
#define SEQCHAOS_PRIMES_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Core>

namespace seqchaos {

/// The first n primes in increasing order, values[0] == 2.
struct PrimeSequence {
  std::vector<std::uint64_t> values;

  std::size_t count() const { return values.size(); }

  /// Read-only Eigen view, for feeding the analysis templates.
  Eigen::Map<const Eigen::Matrix<std::uint64_t, Eigen::Dynamic, 1>> as_vector() const {
    return {values.data(), static_cast<Eigen::Index>(values.size())};
  }

  friend bool operator==(const PrimeSequence&, const PrimeSequence&) = default;
};

inline constexpr std::size_t kMaxSieveCount = 10'000'000;
inline constexpr std::size_t kMaxOracleCount = 200'000;

struct SieveOptions {
  /// Odd-number flags per segment. 2^15 flags = 32 KiB, one L1 data cache on most parts.
  std::size_t segment_flags = std::size_t{1} << 15;
  /// 0 means: SEQCHAOS_THREADS if set, otherwise hardware concurrency.
  unsigned threads = 0;
  /// First sieve limit; 0 uses nth_prime_upper_bound. A limit that is too small grows by 25%.
  std::uint64_t initial_bound = 0;
};

/// First `count` primes by a segmented odd-only sieve of Eratosthenes.
/// The output does not depend on segment size or thread count.
/// Throws CapacityExceeded above kMaxSieveCount.
PrimeSequence sieve_primes(std::size_t count, const SieveOptions& options = {});

/// First `count` primes by per-candidate trial division. Test oracle only.
/// Throws CapacityExceeded above kMaxOracleCount.
PrimeSequence trial_division_oracle(std::size_t count);

/// Upper bound on the nth prime (1-based) used to size the first sieve pass.
std::uint64_t nth_prime_upper_bound(std::size_t n);

/// Thread count from SEQCHAOS_THREADS, falling back to hardware concurrency (at least 1).
unsigned default_thread_count();

}  // namespace seqchaos

#endif  // SEQCHAOS_PRIMES_HPP
