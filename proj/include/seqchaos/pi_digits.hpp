#ifndef SEQCHAOS_PI_DIGITS_HPP
#define SEQCHAOS_PI_DIGITS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Core>

namespace seqchaos {

/// Fractional decimal digits of pi: digits[0] == 1, digits[1] == 4, ... (the leading 3 is not stored).
struct DigitSequence {
  std::vector<std::uint8_t> digits;

  std::size_t count() const { return digits.size(); }

  Eigen::VectorXd as_real() const {
    Eigen::VectorXd v(static_cast<Eigen::Index>(digits.size()));
    for (std::size_t i = 0; i < digits.size(); ++i) v[static_cast<Eigen::Index>(i)] = digits[i];
    return v;
  }

  friend bool operator==(const DigitSequence&, const DigitSequence&) = default;
};

inline constexpr std::size_t kMaxPiDigits = 100'000;

/// Streaming Rabinowitz-Wagon spigot. Throws CapacityExceeded outside [1, kMaxPiDigits].
DigitSequence pi_digits_spigot(std::size_t count);

/// pi = 16 atan(1/5) - 4 atan(1/239) in fixed-point big-integer arithmetic with guard digits.
/// Shares nothing with the spigot; used as its oracle.
DigitSequence pi_digits_machin(std::size_t count);

}  // namespace seqchaos

#endif  // SEQCHAOS_PI_DIGITS_HPP
