#include "vgl/sturm.hpp"

#include <algorithm>
#include <stdexcept>

namespace vgl::sturm {

UPoly::UPoly(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) { trim(); }

void UPoly::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

UPoly UPoly::difference(const SparsePoly& q, const SparsePoly& p) {
  if (q.dim() != 1 || p.dim() != 1) throw DimensionMismatch("univariate difference requires dim 1");
  std::vector<Rational> c;
  auto put = [&c](const ExponentVector& e, const Rational& v) {
    if (c.size() <= e[0]) c.resize(e[0] + 1, Rational(0));
    c[e[0]] += v;
  };
  for (const auto& [e, v] : q.terms()) put(e, v);
  for (const auto& [e, v] : p.terms()) put(e, -v);
  return UPoly(std::move(c));
}

Rational UPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < coefficients_.size(); ++i) d.push_back(coefficients_[i] * static_cast<long>(i));
  return UPoly(std::move(d));
}

UPoly UPoly::remainder(const UPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  std::vector<Rational> r = coefficients_;
  const int dd = divisor.degree();
  while (static_cast<int>(r.size()) - 1 >= dd && !r.empty()) {
    Rational factor = r.back() / divisor.leading();
    std::size_t shift = r.size() - 1 - static_cast<std::size_t>(dd);
    for (int i = 0; i <= dd; ++i) r[shift + static_cast<std::size_t>(i)] -= factor * divisor.coefficients_[static_cast<std::size_t>(i)];
    r.pop_back();
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return UPoly(std::move(r));
}

UPoly UPoly::deflate(const Rational& root) const {
  if (is_zero()) return *this;
  std::vector<Rational> quotient(coefficients_.size() - 1);
  Rational carry = 0;
  for (std::size_t i = coefficients_.size(); i-- > 1;) {
    carry = carry * root + coefficients_[i];
    quotient[i - 1] = carry;
  }
  if (carry * root + coefficients_[0] != 0) throw std::domain_error("deflate: not a root");
  return UPoly(std::move(quotient));
}

UPoly UPoly::operator-() const {
  std::vector<Rational> c = coefficients_;
  for (auto& v : c) v = -v;
  return UPoly(std::move(c));
}

std::vector<UPoly> sturm_sequence(const UPoly& f) {
  std::vector<UPoly> seq;
  if (f.is_zero()) return seq;
  seq.push_back(f);
  UPoly d = f.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(d);
  while (true) {
    UPoly r = -seq[seq.size() - 2].remainder(seq.back());
    if (r.is_zero()) break;
    seq.push_back(std::move(r));
  }
  return seq;
}

namespace {

int variations(const std::vector<int>& signs) {
  int count = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int variations_at(const std::vector<UPoly>& seq, const Rational& x) {
  std::vector<int> signs;
  for (const auto& p : seq) signs.push_back(sgn(p(x)));
  return variations(signs);
}

int variations_at_infinity(const std::vector<UPoly>& seq) {
  std::vector<int> signs;
  for (const auto& p : seq) signs.push_back(sgn(p.leading()));
  return variations(signs);
}

// 1 + max |a_i / a_n| bounds the absolute value of every root.
Rational cauchy_bound(const UPoly& f) {
  Rational best = 0;
  for (int i = 0; i < f.degree(); ++i) {
    Rational ratio = abs(f.coefficients()[static_cast<std::size_t>(i)] / f.leading());
    if (ratio > best) best = ratio;
  }
  return best + 1;
}

struct Isolator {
  const UPoly& f;
  const std::vector<UPoly>& seq;
  std::optional<Rational> exact_root;

  // A non-root point strictly inside (a, b), preferring the midpoint.
  Rational split(const Rational& a, const Rational& b) {
    for (long k = 2;; ++k) {
      Rational m = a + (b - a) / k;
      if (f(m) != 0) return m;
      if (!exact_root) exact_root = m;
      m = b - (b - a) / k;
      if (f(m) != 0) return m;
    }
  }

  int count(const Rational& a, const Rational& b) { return count_roots(seq, a, b); }

  // Appends intervals (a_i, b_i] holding exactly one root each, in increasing order.
  void isolate(const Rational& a, const Rational& b, int roots, std::vector<std::pair<Rational, Rational>>& out) {
    if (roots == 0) return;
    if (roots == 1) {
      out.emplace_back(a, b);
      return;
    }
    Rational m = split(a, b);
    int left = count(a, m);
    isolate(a, m, left, out);
    isolate(m, b, roots - left, out);
  }
};

}  // namespace

int count_roots(const std::vector<UPoly>& sequence, const Rational& a, const Rational& b) {
  return variations_at(sequence, a) - variations_at(sequence, b);
}

int count_roots_above(const std::vector<UPoly>& sequence, const Rational& a) {
  return variations_at(sequence, a) - variations_at_infinity(sequence);
}

IntervalSign analyze(const UPoly& input, const Rational& lo, const std::optional<Rational>& hi) {
  if (hi && !(lo < *hi)) throw std::invalid_argument("analyze: empty interval");
  IntervalSign result;
  const Rational inside = hi ? Rational((lo + *hi) / 2) : Rational(lo + 1);
  if (input.is_zero()) {
    result.nonnegative = true;
    result.witness = inside;
    return result;
  }

  // Strip endpoint roots; (X - lo)^m > 0 inside, (X - hi)^m has sign (-1)^m.
  UPoly f = input;
  int factor_sign = 1;
  while (f(lo) == 0) f = f.deflate(lo);
  if (hi)
    while (f((*hi)) == 0) {
      f = f.deflate(*hi);
      factor_sign = -factor_sign;
    }

  const auto seq = sturm_sequence(f);
  const Rational upper = hi ? *hi : std::max(cauchy_bound(f), Rational(lo + 1));
  const int roots = hi ? count_roots(seq, lo, upper) : count_roots_above(seq, lo);
  result.distinct_roots = roots;

  auto signed_value = [&](const Rational& x) { return factor_sign * sgn(f(x)); };

  if (roots == 0) {
    result.positive = result.nonnegative = signed_value(inside) > 0;
    if (!result.positive) result.witness = inside;
    return result;
  }

  Isolator iso{f, seq, std::nullopt};
  std::vector<std::pair<Rational, Rational>> intervals;
  iso.isolate(lo, upper, roots, intervals);

  // One sample point per gap between consecutive roots.
  std::vector<Rational> gaps;
  {
    Rational a = intervals.front().first, b = intervals.front().second;
    if (a > lo) {
      gaps.push_back(a);
    } else {
      while (true) {
        Rational m = iso.split(a, b);
        if (iso.count(a, m) == 0) {
          gaps.push_back(m);
          break;
        }
        b = m;
      }
    }
  }
  for (std::size_t i = 0; i + 1 < intervals.size(); ++i) gaps.push_back(intervals[i].second);
  {
    Rational a = intervals.back().first, b = intervals.back().second;
    if (b < upper || !hi) {
      gaps.push_back(b < upper ? b : Rational(upper + 1));
    } else {
      while (true) {
        Rational m = iso.split(a, b);
        if (iso.count(m, b) == 0) {
          gaps.push_back(m);
          break;
        }
        a = m;
      }
    }
  }

  result.positive = false;
  result.nonnegative = true;
  for (const auto& g : gaps) {
    if (signed_value(g) < 0) {
      result.nonnegative = false;
      result.witness = g;
      return result;
    }
  }
  if (iso.exact_root) {
    result.witness = *iso.exact_root;
    return result;
  }
  // Narrow the first root to a 1e-12 bracket.
  Rational a = intervals.front().first, b = intervals.front().second;
  const Rational width(1, 1000000000000L);
  while (b - a > width) {
    Rational m = (a + b) / 2;
    if (f(m) == 0) {
      result.witness = m;
      return result;
    }
    if (count_roots(seq, a, m) == 1)
      b = m;
    else
      a = m;
  }
  result.witness = (a + b) / 2;
  result.witness_exact = f(*result.witness) == 0;
  return result;
}

}  // namespace vgl::sturm
