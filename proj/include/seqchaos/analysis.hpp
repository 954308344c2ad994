#ifndef SEQCHAOS_ANALYSIS_HPP
#define SEQCHAOS_ANALYSIS_HPP

#include <cmath>
#include <cstddef>
#include <string>
#include <type_traits>

#include <Eigen/Core>

#include "seqchaos/errors.hpp"

namespace seqchaos {

template <typename Scalar>
using Series = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Return-map points: row j is (source[j], source[j+1]).
template <typename Scalar>
struct ScatterSet {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 2> points;
  std::string source_label;

  Eigen::Index size() const { return points.rows(); }
};

/// D_k for k = first_index, first_index + 1, ... (1-based, the index of the central sample).
template <typename Scalar>
struct RatioSeries {
  Series<Scalar> values;
  Eigen::Index first_index = 2;
  std::string source_label;

  Eigen::Index size() const { return values.size(); }
};

/// Pairs consecutive elements in order. Empty for fewer than two elements.
template <typename Derived, typename Scalar = double>
ScatterSet<Scalar> return_map(const Eigen::DenseBase<Derived>& source, std::string label = {}) {
  const Eigen::Index n = source.size();
  ScatterSet<Scalar> out;
  out.source_label = std::move(label);
  if (n < 2) {
    out.points.resize(0, 2);
    return out;
  }
  out.points.resize(n - 1, 2);
  out.points.col(0) = source.derived().head(n - 1).template cast<Scalar>();
  out.points.col(1) = source.derived().tail(n - 1).template cast<Scalar>();
  return out;
}

namespace detail {

// Signed difference a - b. For integer inputs the subtraction is exact; the only rounding is the
// conversion of the (exact) magnitude to Scalar.
template <typename Scalar, typename T>
Scalar difference(T a, T b) {
  if constexpr (std::is_integral_v<T>) {
    return a >= b ? static_cast<Scalar>(a - b) : -static_cast<Scalar>(b - a);
  } else {
    return static_cast<Scalar>(a - b);
  }
}

}  // namespace detail

/// Ratio of consecutive forward differences:
///   D_k = (f(k+1) - f(k)) / (f(k) - f(k-1)),  k = 2 .. n-1 (1-based).
/// values[j] = (source[j+2] - source[j+1]) / (source[j+1] - source[j]).
///
/// Throws TooShort for fewer than three elements, ZeroDenominator(index) when
/// source[index] == source[index - 1] for some denominator difference.
template <typename Derived, typename Scalar = double>
RatioSeries<Scalar> ratio_derivative(const Eigen::DenseBase<Derived>& source,
                                     std::string label = {}) {
  using In = typename Derived::Scalar;
  const Eigen::Index n = source.size();
  if (n < 3) throw TooShort(static_cast<std::size_t>(n), 3);

  const auto& s = source.derived();
  for (Eigen::Index k = 1; k + 1 < n; ++k) {
    if (s[k] == s[k - 1]) throw ZeroDenominator(static_cast<std::size_t>(k));
  }

  RatioSeries<Scalar> out;
  out.first_index = 2;
  out.source_label = std::move(label);
  out.values.resize(n - 2);
  Scalar previous = detail::difference<Scalar, In>(s[1], s[0]);
  for (Eigen::Index j = 0; j + 2 < n; ++j) {
    const Scalar next = detail::difference<Scalar, In>(s[j + 2], s[j + 1]);
    out.values[j] = next / previous;
    previous = next;
  }
  return out;
}

/// (k, value) pairs for plotting a series against its 1-based index.
template <typename Derived, typename Scalar = double>
ScatterSet<Scalar> indexed_points(const Eigen::DenseBase<Derived>& values, Eigen::Index first_index,
                                  std::string label = {}) {
  ScatterSet<Scalar> out;
  out.source_label = std::move(label);
  out.points.resize(values.size(), 2);
  out.points.col(0) = Series<Scalar>::LinSpaced(values.size(), static_cast<Scalar>(first_index),
                                                static_cast<Scalar>(first_index + values.size() - 1));
  out.points.col(1) = values.derived().template cast<Scalar>();
  return out;
}

}  // namespace seqchaos

#endif  // SEQCHAOS_ANALYSIS_HPP
