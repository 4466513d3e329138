#pragma once

/**
 * @file poly.hpp
 * @brief Sparse multivariate polynomials with nonnegative rational coefficients.
 *
 * Elements of the semiring Q+[X1..Xd]. Coefficients are stored exactly and
 * strictly positive; the empty term map is the zero polynomial. Terms are kept
 * in graded-lexicographic order, which is also the canonical serialization
 * order (descending).
 */

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vgl/rational.hpp"

namespace vgl {

class DimensionMismatch : public std::invalid_argument {
 public:
  explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

class ZeroPolynomialError : public std::invalid_argument {
 public:
  explicit ZeroPolynomialError(const std::string& what) : std::invalid_argument(what) {}
};

/// Syntax or domain error while reading a polynomial; `position` is a byte offset.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Multi-index alpha in N^d.
class ExponentVector {
 public:
  using value_type = std::uint32_t;

  ExponentVector() = default;
  explicit ExponentVector(std::size_t dim) : entries_(dim, 0) {}
  ExponentVector(std::initializer_list<value_type> entries) : entries_(entries) {}
  explicit ExponentVector(std::vector<value_type> entries) : entries_(std::move(entries)) {}

  static ExponentVector unit(std::size_t dim, std::size_t axis);

  std::size_t dim() const { return entries_.size(); }
  value_type operator[](std::size_t i) const { return entries_[i]; }
  value_type& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<value_type>& entries() const { return entries_; }

  std::uint64_t degree() const;
  bool is_zero() const;

  /// Componentwise <=.
  bool dominated_by(const ExponentVector& other) const;

  ExponentVector operator+(const ExponentVector& other) const;

  bool operator==(const ExponentVector&) const = default;

 private:
  std::vector<value_type> entries_;
};

/// Graded lexicographic order: total degree first, then lexicographic with x1 most significant.
struct GradedLexLess {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

class SparsePoly {
 public:
  using TermMap = std::map<ExponentVector, Rational, GradedLexLess>;

  explicit SparsePoly(std::size_t dim = 1);

  static SparsePoly zero(std::size_t dim) { return SparsePoly(dim); }
  static SparsePoly constant(std::size_t dim, const Rational& c);
  static SparsePoly one(std::size_t dim) { return constant(dim, 1); }
  static SparsePoly monomial(const ExponentVector& exponent, const Rational& c = 1);
  /// X_axis (0-based axis).
  static SparsePoly variable(std::size_t dim, std::size_t axis);
  /// u = X1 * ... * Xd, the power universal element.
  static SparsePoly unit_product(std::size_t dim);

  std::size_t dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Coefficient of X^exponent (zero when absent).
  Rational coeff(const ExponentVector& exponent) const;

  /// Adds c * X^exponent; c may be any sign as long as the result stays nonnegative.
  void add_term(const ExponentVector& exponent, const Rational& c);

  /// Graded-lex maximal exponent; the polynomial must be nonzero.
  const ExponentVector& leading_exponent() const;

  SparsePoly& operator+=(const SparsePoly& other);
  SparsePoly& operator*=(const SparsePoly& other);

  bool operator==(const SparsePoly& other) const;

 private:
  std::size_t dim_;
  TermMap terms_;
};

SparsePoly add(const SparsePoly& p, const SparsePoly& q);
SparsePoly mul(const SparsePoly& p, const SparsePoly& q);
SparsePoly pow(const SparsePoly& p, std::uint64_t n);

inline SparsePoly operator+(const SparsePoly& p, const SparsePoly& q) { return add(p, q); }
inline SparsePoly operator*(const SparsePoly& p, const SparsePoly& q) { return mul(p, q); }

/// Exact evaluation; every coordinate must be positive.
Rational eval(const SparsePoly& p, std::span<const Rational> point);
double eval(const SparsePoly& p, std::span<const double> point);

/// (dp/dX_i)(1,...,1) for each axis.
std::vector<Rational> gradient_at_one(const SparsePoly& p);

/// Exponent support in ascending graded-lex order. Throws on the zero polynomial.
std::vector<ExponentVector> newton_support(const SparsePoly& p);

/// p(1,...,1).
Rational mass(const SparsePoly& p);

/// Largest variable index mentioned in the text form (0 if none); the text is not validated.
std::size_t max_variable_index(std::string_view text);

/**
 * Reads the text grammar
 *
 *     poly   := term ('+' term)*
 *     term   := [rational '*'] factor ('*' factor)* | rational
 *     factor := 'x' index ['^' exponent]
 *
 * e.g. `3/2*x1^2*x2 + x2 + 1`. Whitespace is ignored between tokens. Negative
 * coefficients or exponents are rejected. When `dim` is 0 the dimension is the
 * largest variable index mentioned (at least 1); otherwise every index must be
 * <= dim.
 */
SparsePoly parse_poly(std::string_view text, std::size_t dim = 0);

/// Canonical text form, terms in descending graded-lex order; "0" for zero.
std::string to_string(const SparsePoly& p);
std::string to_string(const ExponentVector& e);

}  // namespace vgl
