#ifndef SEQCHAOS_SPECTRUM_HPP
#define SEQCHAOS_SPECTRUM_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <vector>

#include <Eigen/Core>

#include "seqchaos/errors.hpp"

namespace seqchaos {

/// Harmonics of Y[k] = (1/N) sum_n x[n] exp(-2 pi i k n / N), k = 0 .. N-1, and their moduli.
template <typename Scalar>
struct Spectrum {
  using Complex = std::complex<Scalar>;

  Eigen::Matrix<Complex, Eigen::Dynamic, 1> harmonics;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> amplitudes;

  Eigen::Index size() const { return harmonics.size(); }
};

inline constexpr std::size_t kMaxTransformSize = std::size_t{1} << 22;
inline constexpr std::size_t kMaxNaiveSize = 8192;

namespace detail {

template <typename Scalar>
using ComplexVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

// exp(-2 pi i j / n) for j = 0 .. n-1, each evaluated directly (no recurrence drift).
template <typename Scalar>
ComplexVector<Scalar> unit_roots(Eigen::Index n) {
  ComplexVector<Scalar> w(n);
  const Scalar step = Scalar(2) * std::numbers::pi_v<Scalar> / static_cast<Scalar>(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const Scalar angle = step * static_cast<Scalar>(j);
    w[j] = {std::cos(angle), -std::sin(angle)};
  }
  return w;
}

// In-place iterative radix-2 transform, length a power of two. inverse flips the sign of the
// exponent and does not scale.
template <typename Scalar>
void radix2_fft(ComplexVector<Scalar>& a, const ComplexVector<Scalar>& roots, bool inverse) {
  const Eigen::Index n = a.size();
  for (Eigen::Index i = 1, j = 0; i < n; ++i) {
    Eigen::Index bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (Eigen::Index len = 2; len <= n; len <<= 1) {
    const Eigen::Index stride = n / len;
    const Eigen::Index half = len / 2;
    for (Eigen::Index start = 0; start < n; start += len) {
      for (Eigen::Index k = 0; k < half; ++k) {
        std::complex<Scalar> w = roots[k * stride];
        if (inverse) w = std::conj(w);
        const auto u = a[start + k];
        const auto v = a[start + k + half] * w;
        a[start + k] = u + v;
        a[start + k + half] = u - v;
      }
    }
  }
}

inline bool is_power_of_two(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }

// Unnormalised forward DFT of arbitrary length via Bluestein's chirp-z identity
//   kn = (k^2 + n^2 - (k-n)^2) / 2,
// turning the transform into a circular convolution of power-of-two length m >= 2n - 1.
template <typename Scalar>
ComplexVector<Scalar> bluestein(const ComplexVector<Scalar>& x) {
  const Eigen::Index n = x.size();
  Eigen::Index m = 1;
  while (m < 2 * n - 1) m <<= 1;

  // chirp[k] = exp(-i pi k^2 / n); k^2 is reduced mod 2n in integers to keep the angle small.
  ComplexVector<Scalar> chirp(n);
  const auto two_n = static_cast<std::uint64_t>(2 * n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto kk = static_cast<std::uint64_t>(k);
    const std::uint64_t r = (kk * kk) % two_n;
    const Scalar angle = std::numbers::pi_v<Scalar> * static_cast<Scalar>(r) / static_cast<Scalar>(n);
    chirp[k] = {std::cos(angle), -std::sin(angle)};
  }

  ComplexVector<Scalar> a = ComplexVector<Scalar>::Zero(m);
  ComplexVector<Scalar> b = ComplexVector<Scalar>::Zero(m);
  for (Eigen::Index k = 0; k < n; ++k) a[k] = x[k] * chirp[k];
  b[0] = std::conj(chirp[0]);
  for (Eigen::Index k = 1; k < n; ++k) b[k] = b[m - k] = std::conj(chirp[k]);

  const auto roots = unit_roots<Scalar>(m);
  radix2_fft(a, roots, false);
  radix2_fft(b, roots, false);
  a = a.cwiseProduct(b);
  radix2_fft(a, roots, true);

  ComplexVector<Scalar> out(n);
  const Scalar scale = Scalar(1) / static_cast<Scalar>(m);
  for (Eigen::Index k = 0; k < n; ++k) out[k] = a[k] * scale * chirp[k];
  return out;
}

template <typename Scalar>
Spectrum<Scalar> finish(ComplexVector<Scalar> unnormalised) {
  Spectrum<Scalar> s;
  const Scalar inv_n = Scalar(1) / static_cast<Scalar>(unnormalised.size());
  s.harmonics = unnormalised * inv_n;
  s.amplitudes = s.harmonics.cwiseAbs();
  return s;
}

}  // namespace detail

/// Normalised DFT of a real sequence of any length N >= 1, in O(N log N).
/// Power-of-two N uses radix-2 directly; any other N goes through Bluestein.
/// Throws EmptyInput for N = 0, CapacityExceeded above kMaxTransformSize.
template <typename Derived, typename Scalar = double>
Spectrum<Scalar> dft_amplitude(const Eigen::DenseBase<Derived>& samples) {
  const Eigen::Index n = samples.size();
  if (n == 0) throw EmptyInput();
  if (static_cast<std::size_t>(n) > kMaxTransformSize) {
    throw CapacityExceeded("dft_amplitude", static_cast<std::size_t>(n), kMaxTransformSize);
  }
  detail::ComplexVector<Scalar> x = samples.derived().template cast<Scalar>().template cast<std::complex<Scalar>>();
  if (detail::is_power_of_two(n)) {
    detail::radix2_fft(x, detail::unit_roots<Scalar>(n), false);
    return detail::finish(std::move(x));
  }
  return detail::finish(detail::bluestein(x));
}

/// Direct O(N^2) evaluation of the same sum. Reference oracle for dft_amplitude.
/// Throws EmptyInput for N = 0, CapacityExceeded above kMaxNaiveSize.
template <typename Derived, typename Scalar = double>
Spectrum<Scalar> naive_dft(const Eigen::DenseBase<Derived>& samples) {
  const Eigen::Index n = samples.size();
  if (n == 0) throw EmptyInput();
  if (static_cast<std::size_t>(n) > kMaxNaiveSize) {
    throw CapacityExceeded("naive_dft", static_cast<std::size_t>(n), kMaxNaiveSize);
  }
  const auto& x = samples.derived();
  const auto roots = detail::unit_roots<Scalar>(n);
  detail::ComplexVector<Scalar> y(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    std::complex<Scalar> acc{0, 0};
    for (Eigen::Index j = 0; j < n; ++j) {
      // exp(-2 pi i k j / n) depends only on k j mod n.
      acc += static_cast<Scalar>(x[j]) * roots[(k * j) % n];
    }
    y[k] = acc;
  }
  return detail::finish(std::move(y));
}

}  // namespace seqchaos

#endif  // SEQCHAOS_SPECTRUM_HPP
