#include "vgl/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>

namespace vgl {

ExponentVector ExponentVector::unit(std::size_t dim, std::size_t axis) {
  ExponentVector e(dim);
  e[axis] = 1;
  return e;
}

std::uint64_t ExponentVector::degree() const {
  std::uint64_t total = 0;
  for (auto v : entries_) total += v;
  return total;
}

bool ExponentVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](value_type v) { return v == 0; });
}

bool ExponentVector::dominated_by(const ExponentVector& other) const {
  if (dim() != other.dim()) throw DimensionMismatch("exponent vectors of different length");
  for (std::size_t i = 0; i < dim(); ++i)
    if (entries_[i] > other.entries_[i]) return false;
  return true;
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const {
  if (dim() != other.dim()) throw DimensionMismatch("exponent vectors of different length");
  ExponentVector sum(dim());
  for (std::size_t i = 0; i < dim(); ++i) sum.entries_[i] = entries_[i] + other.entries_[i];
  return sum;
}

bool GradedLexLess::operator()(const ExponentVector& a, const ExponentVector& b) const {
  auto da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.entries() < b.entries();
}

SparsePoly::SparsePoly(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw std::invalid_argument("polynomial dimension must be >= 1");
}

SparsePoly SparsePoly::constant(std::size_t dim, const Rational& c) {
  SparsePoly p(dim);
  p.add_term(ExponentVector(dim), c);
  return p;
}

SparsePoly SparsePoly::monomial(const ExponentVector& exponent, const Rational& c) {
  SparsePoly p(exponent.dim());
  p.add_term(exponent, c);
  return p;
}

SparsePoly SparsePoly::variable(std::size_t dim, std::size_t axis) {
  if (axis >= dim) throw std::out_of_range("variable axis out of range");
  return monomial(ExponentVector::unit(dim, axis));
}

SparsePoly SparsePoly::unit_product(std::size_t dim) {
  return monomial(ExponentVector(std::vector<ExponentVector::value_type>(dim, 1)));
}

Rational SparsePoly::coeff(const ExponentVector& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SparsePoly::add_term(const ExponentVector& exponent, const Rational& c) {
  if (exponent.dim() != dim_) throw DimensionMismatch("term dimension does not match polynomial");
  if (c == 0) return;
  auto it = terms_.find(exponent);
  Rational updated = it == terms_.end() ? c : Rational(it->second + c);
  if (updated < 0) throw std::domain_error("negative coefficient in nonnegative polynomial");
  if (updated == 0) {
    terms_.erase(it);
  } else if (it == terms_.end()) {
    terms_.emplace(exponent, std::move(updated));
  } else {
    it->second = std::move(updated);
  }
}

const ExponentVector& SparsePoly::leading_exponent() const {
  if (terms_.empty()) throw ZeroPolynomialError("leading exponent of zero polynomial");
  return terms_.rbegin()->first;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& other) {
  if (dim_ != other.dim_) throw DimensionMismatch("add: dimensions differ");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const SparsePoly& other) {
  *this = mul(*this, other);
  return *this;
}

bool SparsePoly::operator==(const SparsePoly& other) const {
  return dim_ == other.dim_ && terms_ == other.terms_;
}

SparsePoly add(const SparsePoly& p, const SparsePoly& q) {
  SparsePoly r = p;
  r += q;
  return r;
}

SparsePoly mul(const SparsePoly& p, const SparsePoly& q) {
  if (p.dim() != q.dim()) throw DimensionMismatch("mul: dimensions differ");
  SparsePoly r(p.dim());
  Rational product;
  for (const auto& [ep, cp] : p.terms())
    for (const auto& [eq, cq] : q.terms()) {
      product = cp * cq;
      r.add_term(ep + eq, product);
    }
  return r;
}

SparsePoly pow(const SparsePoly& p, std::uint64_t n) {
  SparsePoly result = SparsePoly::one(p.dim());
  SparsePoly base = p;
  while (n > 0) {
    if (n & 1U) result = mul(result, base);
    n >>= 1U;
    if (n > 0) base = mul(base, base);
  }
  return result;
}

Rational eval(const SparsePoly& p, std::span<const Rational> point) {
  if (point.size() != p.dim()) throw DimensionMismatch("eval: point dimension differs");
  for (const auto& r : point)
    if (r <= 0) throw std::domain_error("eval: coordinates must be positive");
  Rational total = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < e.dim(); ++i)
      if (e[i] != 0) term *= rational_pow(point[i], e[i]);
    total += term;
  }
  return total;
}

double eval(const SparsePoly& p, std::span<const double> point) {
  if (point.size() != p.dim()) throw DimensionMismatch("eval: point dimension differs");
  for (double r : point)
    if (!(r > 0)) throw std::domain_error("eval: coordinates must be positive");
  double total = 0;
  for (const auto& [e, c] : p.terms()) {
    double term = c.get_d();
    for (std::size_t i = 0; i < e.dim(); ++i) term *= std::pow(point[i], static_cast<double>(e[i]));
    total += term;
  }
  return total;
}

std::vector<Rational> gradient_at_one(const SparsePoly& p) {
  std::vector<Rational> grad(p.dim(), Rational(0));
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = 0; i < e.dim(); ++i)
      if (e[i] != 0) grad[i] += c * e[i];
  return grad;
}

std::vector<ExponentVector> newton_support(const SparsePoly& p) {
  if (p.is_zero()) throw ZeroPolynomialError("newton_support of zero polynomial");
  std::vector<ExponentVector> support;
  support.reserve(p.size());
  for (const auto& [e, c] : p.terms()) support.push_back(e);
  return support;
}

Rational mass(const SparsePoly& p) {
  Rational total = 0;
  for (const auto& [e, c] : p.terms()) total += c;
  return total;
}

// ---------------------------------------------------------------------------
// Text form

std::size_t max_variable_index(std::string_view text) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'x' && text[i] != 'X') continue;
    std::size_t j = i + 1, value = 0;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
      value = value * 10 + static_cast<std::size_t>(text[j] - '0');
      if (value > 1'000'000) break;
      ++j;
    }
    best = std::max(best, value);
  }
  return best;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t dim) : text_(text), dim_(dim) {}

  SparsePoly parse() {
    SparsePoly result(dim_);
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    while (true) {
      parse_term(result);
      skip_ws();
      if (at_end()) break;
      if (peek() == '-') throw ParseError("negative coefficient (subtraction is not allowed)", pos_);
      if (peek() != '+') throw ParseError(std::string("unexpected character '") + peek() + "'", pos_);
      ++pos_;
      skip_ws();
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  static bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

  std::string read_digits() {
    std::size_t start = pos_;
    while (!at_end() && is_digit(peek())) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Rational parse_coefficient() {
    std::size_t start = pos_;
    std::string num = read_digits();
    std::string den = "1";
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      if (at_end() || !is_digit(peek())) throw ParseError("expected denominator", pos_);
      den = read_digits();
    }
    if (Integer(den) == 0) throw ParseError("zero denominator", start);
    Rational c{Integer(num), Integer(den)};
    c.canonicalize();
    return c;
  }

  void parse_factor(ExponentVector& exponent) {
    std::size_t start = pos_;
    ++pos_;  // 'x'
    if (at_end() || !is_digit(peek())) throw ParseError("expected variable index after 'x'", pos_);
    std::string digits = read_digits();
    if (digits.size() > 6) throw ParseError("variable index too large", start);
    std::size_t index = std::stoul(digits);
    if (index == 0 || index > dim_) throw ParseError("variable index out of range", start);
    std::uint64_t power = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      if (!at_end() && peek() == '-') throw ParseError("negative exponent", pos_);
      if (at_end() || !is_digit(peek())) throw ParseError("expected exponent", pos_);
      std::size_t epos = pos_;
      std::string e = read_digits();
      if (e.size() > 9) throw ParseError("exponent too large", epos);
      power = std::stoull(e);
    }
    std::uint64_t total = exponent[index - 1] + power;
    if (total > std::numeric_limits<std::uint32_t>::max() / 2) throw ParseError("exponent too large", start);
    exponent[index - 1] = static_cast<ExponentVector::value_type>(total);
  }

  void parse_term(SparsePoly& into) {
    if (at_end()) throw ParseError("expected term", pos_);
    if (peek() == '-') throw ParseError("negative coefficient", pos_);
    Rational c = 1;
    ExponentVector exponent(dim_);
    bool need_factor = true;
    if (is_digit(peek())) {
      c = parse_coefficient();
      skip_ws();
      if (at_end() || peek() != '*') {
        need_factor = false;
      } else {
        ++pos_;
        skip_ws();
      }
    }
    if (need_factor) {
      while (true) {
        if (at_end() || (peek() != 'x' && peek() != 'X')) throw ParseError("expected factor 'x<i>'", pos_);
        parse_factor(exponent);
        skip_ws();
        if (at_end() || peek() != '*') break;
        ++pos_;
        skip_ws();
      }
    }
    into.add_term(exponent, c);
  }

  std::string_view text_;
  std::size_t dim_;
  std::size_t pos_ = 0;
};

}  // namespace

SparsePoly parse_poly(std::string_view text, std::size_t dim) {
  if (dim == 0) dim = std::max<std::size_t>(1, max_variable_index(text));
  return PolyParser(text, dim).parse();
}

std::string to_string(const ExponentVector& e) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < e.dim(); ++i) out << (i ? "," : "") << e[i];
  out << ')';
  return out.str();
}

std::string to_string(const SparsePoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) out << " + ";
    first = false;
    bool constant = e.is_zero();
    bool wrote = false;
    if (c != 1 || constant) {
      out << to_string(c);
      wrote = true;
    }
    for (std::size_t i = 0; i < e.dim(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) out << '*';
      out << 'x' << (i + 1);
      if (e[i] != 1) out << '^' << e[i];
      wrote = true;
    }
  }
  return out.str();
}

}  // namespace vgl
