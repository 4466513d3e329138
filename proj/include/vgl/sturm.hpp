#pragma once

/**
 * @file sturm.hpp
 * @brief Exact sign analysis of univariate rational polynomials on intervals.
 *
 * Root counting uses Sturm sequences; roots are isolated by bisection with
 * rational endpoints, so every reported violation point is exact.
 */

#include <optional>
#include <vector>

#include "vgl/poly.hpp"
#include "vgl/rational.hpp"

namespace vgl::sturm {

/// Dense univariate polynomial with signed rational coefficients, lowest degree first.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coefficients);

  /// q - p for univariate (dim 1) polynomials.
  static UPoly difference(const SparsePoly& q, const SparsePoly& p);

  bool is_zero() const { return coefficients_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coefficients_; }
  const Rational& leading() const { return coefficients_.back(); }

  Rational operator()(const Rational& x) const;
  UPoly derivative() const;

  /// Remainder of division by a nonzero divisor.
  UPoly remainder(const UPoly& divisor) const;
  /// Quotient by (X - root); requires root to be a root.
  UPoly deflate(const Rational& root) const;

  UPoly operator-() const;

 private:
  void trim();
  std::vector<Rational> coefficients_;
};

/// Canonical Sturm sequence f, f', -rem(f, f'), ...
std::vector<UPoly> sturm_sequence(const UPoly& f);

/// Number of distinct real roots in (a, b], a < b, both non-roots of f.
int count_roots(const std::vector<UPoly>& sequence, const Rational& a, const Rational& b);
/// Number of distinct real roots in (a, +inf), a a non-root.
int count_roots_above(const std::vector<UPoly>& sequence, const Rational& a);

/// Result of analyzing the sign of f on an open interval.
struct IntervalSign {
  bool positive = false;     ///< f > 0 everywhere on the interval
  bool nonnegative = false;  ///< f >= 0 everywhere on the interval
  int distinct_roots = 0;
  /// When !nonnegative: a rational point with f < 0. When nonnegative but not
  /// positive: a root (exact if `witness_exact`, else a rational within 1e-12).
  std::optional<Rational> witness;
  bool witness_exact = true;
};

/// Sign of f on (lo, hi), or (lo, +inf) when hi is empty. Requires lo < hi.
IntervalSign analyze(const UPoly& f, const Rational& lo, const std::optional<Rational>& hi);

}  // namespace vgl::sturm
