#include "seqchaos/pi_digits.hpp"

#include <algorithm>
#include <string>

#include "seqchaos/errors.hpp"

namespace seqchaos {

namespace {

void check_count(const char* op, std::size_t count) {
  if (count == 0 || count > kMaxPiDigits) throw CapacityExceeded(op, count, kMaxPiDigits);
}

// Digits produced per spigot step. With base 1000 every intermediate is below
// 4 * 1000 * cells, which stays inside 32 bits for kMaxPiDigits.
constexpr std::uint32_t kChunkDigits = 3;
constexpr std::uint32_t kChunkBase = 1000;

// Runs the spigot for `total` digits (including the leading 3) and returns the digits whose
// value is settled, i.e. no longer subject to a carry from a held predigit or run of nines.
std::vector<std::uint8_t> spigot_settled_digits(std::size_t total) {
  const std::size_t len = total * 10 / 3 + 1;
  std::vector<std::uint32_t> cells(len, 2);
  std::vector<std::uint8_t> settled;
  settled.reserve(total + kChunkDigits);

  // Held chunk and the count of all-nines chunks queued behind it.
  std::uint32_t predigit = 0;
  std::size_t nines = 0;
  bool have_predigit = false;
  bool integer_part = true;
  auto emit = [&](std::uint32_t chunk) {
    if (integer_part) {
      settled.push_back(static_cast<std::uint8_t>(chunk));
      integer_part = false;
      return;
    }
    for (std::uint32_t div = kChunkBase / 10; div > 0; div /= 10) {
      settled.push_back(static_cast<std::uint8_t>(chunk / div % 10));
    }
  };

  std::size_t produced = 0;  // decimal digits covered by the chunks computed so far
  while (produced < total) {
    // The cells hold the remaining fraction in the mixed radix 1/3, 2/5, 3/7, ...; each cell
    // is worth about one bit, so only 10/3 cells per still-missing digit (plus slack) matter.
    const std::size_t remaining = total - produced;
    const std::size_t active = std::min(len, remaining * 10 / 3 + 20);

    std::uint32_t carry = 0;
    for (std::size_t i = active; i > 0; --i) {
      const auto idx = static_cast<std::uint32_t>(i);
      const std::uint32_t x = kChunkBase * cells[i - 1] + carry * idx;
      const std::uint32_t den = 2 * idx - 1;
      cells[i - 1] = x % den;
      carry = x / den;
    }
    cells[0] = carry % kChunkBase;
    const std::uint32_t q = carry / kChunkBase;
    produced += have_predigit ? kChunkDigits : 1;

    if (q == kChunkBase - 1) {
      ++nines;
    } else if (q >= kChunkBase) {
      emit(predigit + 1);
      for (; nines > 0; --nines) emit(0);
      predigit = q - kChunkBase;
    } else {
      if (have_predigit) emit(predigit);
      have_predigit = true;
      predigit = q;
      for (; nines > 0; --nines) emit(kChunkBase - 1);
    }
  }
  return settled;
}

// Non-negative fixed-point number: limbs_[0] is the integer part, limbs_[i] holds fractional
// digits 9(i-1)+1 .. 9i in base 10^9.
class FixedPoint {
 public:
  static constexpr std::uint64_t kBase = 1'000'000'000;

  explicit FixedPoint(std::size_t fraction_limbs) : limbs_(fraction_limbs + 1, 0) {}

  static FixedPoint integer(std::uint32_t value, std::size_t fraction_limbs) {
    FixedPoint f(fraction_limbs);
    f.limbs_[0] = value;
    return f;
  }

  bool is_zero() const { return first_nonzero() == limbs_.size(); }

  // Truncating division by a small divisor; the result is at most 1 ulp below the exact value.
  FixedPoint& divide(std::uint64_t divisor) {
    std::uint64_t rem = 0;
    for (std::size_t i = first_nonzero(); i < limbs_.size(); ++i) {
      const std::uint64_t cur = rem * kBase + limbs_[i];
      limbs_[i] = static_cast<std::uint32_t>(cur / divisor);
      rem = cur % divisor;
    }
    return *this;
  }

  FixedPoint& multiply(std::uint32_t factor) {
    std::uint64_t carry = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
      const std::uint64_t cur = std::uint64_t{limbs_[i]} * factor + carry;
      limbs_[i] = static_cast<std::uint32_t>(cur % kBase);
      carry = cur / kBase;
    }
    return *this;
  }

  FixedPoint& add(const FixedPoint& other) {
    std::uint64_t carry = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
      const std::uint64_t cur = std::uint64_t{limbs_[i]} + other.limbs_[i] + carry;
      limbs_[i] = static_cast<std::uint32_t>(cur % kBase);
      carry = cur / kBase;
    }
    return *this;
  }

  // Requires *this >= other.
  FixedPoint& subtract(const FixedPoint& other) {
    std::int64_t borrow = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
      std::int64_t cur = std::int64_t{limbs_[i]} - other.limbs_[i] - borrow;
      borrow = cur < 0 ? 1 : 0;
      if (cur < 0) cur += static_cast<std::int64_t>(kBase);
      limbs_[i] = static_cast<std::uint32_t>(cur);
    }
    return *this;
  }

  std::uint32_t integer_part() const { return limbs_[0]; }

  std::string fraction_digits() const {
    std::string s;
    s.reserve((limbs_.size() - 1) * 9);
    for (std::size_t i = 1; i < limbs_.size(); ++i) {
      std::string chunk = std::to_string(limbs_[i]);
      s.append(9 - chunk.size(), '0');
      s += chunk;
    }
    return s;
  }

 private:
  std::size_t first_nonzero() const {
    std::size_t i = 0;
    while (i < limbs_.size() && limbs_[i] == 0) ++i;
    return i;
  }

  std::vector<std::uint32_t> limbs_;
};

struct SeriesResult {
  FixedPoint value;
  std::size_t truncations;  // each one contributes at most 1 ulp of error
};

// atan(1/x) = sum_k (-1)^k / ((2k+1) x^(2k+1)).
SeriesResult arctan_inverse(std::uint32_t x, std::size_t fraction_limbs) {
  FixedPoint power = FixedPoint::integer(1, fraction_limbs);
  power.divide(x);
  FixedPoint sum = power;
  std::size_t truncations = 1;
  const std::uint64_t x_squared = std::uint64_t{x} * x;
  for (std::uint64_t k = 1;; ++k) {
    power.divide(x_squared);
    ++truncations;
    if (power.is_zero()) break;
    FixedPoint term = power;
    term.divide(2 * k + 1);
    ++truncations;
    if (k % 2 == 1) {
      sum.subtract(term);
    } else {
      sum.add(term);
    }
  }
  return {std::move(sum), truncations};
}

// Digits of pi with `guard` extra digits beyond `count`, or an empty string when the guard
// digits leave the last requested digit ambiguous.
std::string machin_digits(std::size_t count, std::size_t guard) {
  // Ten working digits beyond count + guard absorb the accumulated truncation error.
  constexpr std::size_t kWorkingDigits = 10;
  const std::size_t fraction_limbs = (count + guard + kWorkingDigits + 8) / 9;

  auto a5 = arctan_inverse(5, fraction_limbs);
  auto a239 = arctan_inverse(239, fraction_limbs);
  FixedPoint pi = a5.value;
  pi.multiply(16);
  FixedPoint tail = a239.value;
  tail.multiply(4);
  pi.subtract(tail);

  // Error bound in ulps of the working precision; must stay below 10^kWorkingDigits.
  const std::size_t error_ulps = 16 * a5.truncations + 4 * a239.truncations;
  if (error_ulps >= 10'000'000'000ULL) {
    throw Error("pi_digits_machin: truncation error bound exceeds working digits");
  }

  if (pi.integer_part() != 3) throw Error("pi_digits_machin: integer part is not 3");
  std::string digits = pi.fraction_digits().substr(0, count + guard);
  const std::string guard_digits = digits.substr(count);
  const bool ambiguous = guard_digits.find_first_not_of('9') == std::string::npos ||
                         guard_digits.find_first_not_of('0') == std::string::npos;
  if (ambiguous) return {};
  digits.resize(count);
  return digits;
}

}  // namespace

DigitSequence pi_digits_spigot(std::size_t count) {
  check_count("pi_digits_spigot", count);
  // Leading 3 plus a few trailing digits whose final value is still pending.
  for (std::size_t guard = 10;; guard *= 2) {
    const auto settled = spigot_settled_digits(count + 1 + guard);
    if (settled.size() >= count + 1) {
      DigitSequence out;
      out.digits.assign(settled.begin() + 1, settled.begin() + 1 + static_cast<std::ptrdiff_t>(count));
      return out;
    }
  }
}

DigitSequence pi_digits_machin(std::size_t count) {
  check_count("pi_digits_machin", count);
  std::string digits = machin_digits(count, 10);
  if (digits.empty()) digits = machin_digits(count, 20);
  if (digits.empty()) throw Error("pi_digits_machin: guard digits still ambiguous at 20");
  DigitSequence out;
  out.digits.reserve(count);
  for (const char c : digits) out.digits.push_back(static_cast<std::uint8_t>(c - '0'));
  return out;
}

}  // namespace seqchaos
