#include "vgl/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "vgl/lp.hpp"
#include "vgl/sturm.hpp"

namespace vgl {

namespace {

void require_nonzero(const SparsePoly& p, const SparsePoly& q) {
  if (p.dim() != q.dim()) throw DimensionMismatch("spectral: dimensions differ");
  if (p.is_zero() || q.is_zero()) throw ZeroPolynomialError("spectral: zero polynomial");
}

void require_mass_equal(const SparsePoly& p, const SparsePoly& q) {
  require_nonzero(p, q);
  if (mass(p) != mass(q)) throw std::invalid_argument("spectral: masses differ");
}

Rational dot(const std::vector<Rational>& beta, const ExponentVector& s) {
  Rational total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i)
    if (s[i] != 0) total += beta[i] * s[i];
  return total;
}

bool on_simplex(const std::vector<Rational>& v) {
  Rational total = 0;
  for (const auto& x : v) {
    if (x < 0) return false;
    total += x;
  }
  return total == 1;
}

std::vector<Rational> ones(std::size_t dim) { return std::vector<Rational>(dim, Rational(1)); }

ConditionResult make_condition(std::string name, std::string family, bool strict) {
  ConditionResult c;
  c.name = std::move(name);
  c.family = std::move(family);
  c.strict = strict;
  return c;
}

void finish(ConditionResult& c) { c.holds = c.strict ? c.holds_strict : c.holds_nonstrict; }

}  // namespace

void validate_point(const SpectrumPoint& point) {
  if (const auto* e = std::get_if<EvalPoint>(&point)) {
    if (e->r.empty()) throw std::invalid_argument("evaluation point has no coordinates");
    bool all_one = true;
    for (const auto& r : e->r) {
      if (r <= 0) throw std::invalid_argument("evaluation point must be positive");
      if (e->side == EvalSide::Upper && r < 1) throw std::invalid_argument("upper evaluation point below 1");
      if (e->side == EvalSide::Lower && r > 1) throw std::invalid_argument("lower evaluation point above 1");
      if (r != 1) all_one = false;
    }
    if (all_one) throw std::invalid_argument("evaluation at the all-ones point is degenerate");
  } else if (const auto* t = std::get_if<TropicalPoint>(&point)) {
    if (t->beta.empty() || !on_simplex(t->beta)) throw std::invalid_argument("tropical direction must lie on the unit simplex");
  } else {
    const auto& d = std::get<DerivationPoint>(point);
    if (d.gamma.empty() || !on_simplex(d.gamma)) throw std::invalid_argument("derivation direction must lie on the unit simplex");
  }
}

Rational support_max(const SparsePoly& p, const std::vector<Rational>& beta) {
  auto support = newton_support(p);
  if (beta.size() != p.dim()) throw DimensionMismatch("support_max: direction dimension");
  Rational best = dot(beta, support.front());
  for (const auto& s : support) best = std::max(best, dot(beta, s));
  return best;
}

Rational support_min(const SparsePoly& p, const std::vector<Rational>& beta) {
  auto support = newton_support(p);
  if (beta.size() != p.dim()) throw DimensionMismatch("support_min: direction dimension");
  Rational best = dot(beta, support.front());
  for (const auto& s : support) best = std::min(best, dot(beta, s));
  return best;
}

std::string to_string(VerificationMode mode) {
  switch (mode) {
    case VerificationMode::Exact:
      return "exact";
    case VerificationMode::ExactSufficient:
      return "exact-sufficient";
    case VerificationMode::Sampled:
      return "sampled";
  }
  return "unknown";
}

Witness Witness::at(const SpectrumPoint& point, Rational lhs, Rational rhs) {
  Witness w;
  if (const auto* e = std::get_if<EvalPoint>(&point)) {
    w.kind = "evaluation";
    w.side = e->side == EvalSide::Upper ? "upper" : "lower";
    w.coordinates = e->r;
  } else if (const auto* t = std::get_if<TropicalPoint>(&point)) {
    w.kind = "tropical";
    w.side = t->side == TropicalSide::Max ? "max" : "min";
    w.coordinates = t->beta;
  } else {
    w.kind = "derivation";
    w.coordinates = std::get<DerivationPoint>(point).gamma;
  }
  w.lhs = std::move(lhs);
  w.rhs = std::move(rhs);
  return w;
}

bool check_mass(const SparsePoly& p, const SparsePoly& q) {
  require_nonzero(p, q);
  return mass(p) == mass(q);
}

DerivationCheck check_derivations(const SparsePoly& p, const SparsePoly& q, bool strict) {
  require_mass_equal(p, q);
  DerivationCheck check;
  check.lhs = gradient_at_one(p);
  check.rhs = gradient_at_one(q);
  auto& c = check.condition = make_condition("derivation", "derivation", strict);
  c.holds_nonstrict = c.holds_strict = true;
  std::optional<std::size_t> equal_axis;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (check.lhs[i] > check.rhs[i]) {
      if (c.holds_nonstrict) {
        std::vector<Rational> gamma(p.dim(), Rational(0));
        gamma[i] = 1;
        c.witness = Witness::at(DerivationPoint{gamma}, check.lhs[i], check.rhs[i]);
      }
      c.holds_nonstrict = c.holds_strict = false;
    } else if (check.lhs[i] == check.rhs[i]) {
      c.holds_strict = false;
      if (!equal_axis) equal_axis = i;
    }
  }
  if (c.holds_nonstrict && !c.holds_strict && strict) {
    std::vector<Rational> gamma(p.dim(), Rational(0));
    gamma[*equal_axis] = 1;
    c.witness = Witness::at(DerivationPoint{gamma}, check.lhs[*equal_axis], check.rhs[*equal_axis]);
  }
  finish(c);
  return check;
}

namespace {

struct SideOptimum {
  Rational gap;
  std::vector<Rational> beta;
};

// max over the simplex of (<beta, s> - max_{s' in other} <beta, s'>), for each s in `own`.
SideOptimum max_side_gap(const std::vector<ExponentVector>& own, const std::vector<ExponentVector>& other,
                         std::size_t dim) {
  std::optional<SideOptimum> best;
  for (const auto& s : own) {
    lp::Problem problem;
    problem.variables = dim + 1;  // beta..., t
    problem.objective.assign(dim + 1, Rational(0));
    for (std::size_t i = 0; i < dim; ++i) problem.objective[i] = s[i];
    problem.objective[dim] = -1;
    for (const auto& s2 : other) {
      lp::Constraint c;
      c.coefficients.assign(dim + 1, Rational(0));
      for (std::size_t i = 0; i < dim; ++i) c.coefficients[i] = s2[i];
      c.coefficients[dim] = -1;
      c.relation = lp::Relation::LessEqual;
      c.rhs = 0;
      problem.constraints.push_back(std::move(c));
    }
    lp::Constraint simplex;
    simplex.coefficients.assign(dim + 1, Rational(1));
    simplex.coefficients[dim] = 0;
    simplex.relation = lp::Relation::Equal;
    simplex.rhs = 1;
    problem.constraints.push_back(std::move(simplex));
    auto result = lp::maximize(problem);
    if (result.status != lp::Status::Optimal) throw std::logic_error("tropical LP did not reach an optimum");
    if (!best || result.value > best->gap)
      best = SideOptimum{result.value, std::vector<Rational>(result.solution.begin(), result.solution.begin() + static_cast<std::ptrdiff_t>(dim))};
  }
  return *best;
}

// max over the simplex of (min_{s in low} <beta, s> - <beta, t>), for each t in `high`.
SideOptimum min_side_gap(const std::vector<ExponentVector>& low, const std::vector<ExponentVector>& high,
                         std::size_t dim) {
  std::optional<SideOptimum> best;
  for (const auto& t : high) {
    lp::Problem problem;
    problem.variables = dim + 1;  // beta..., m
    problem.objective.assign(dim + 1, Rational(0));
    for (std::size_t i = 0; i < dim; ++i) problem.objective[i] = -Rational(t[i]);
    problem.objective[dim] = 1;
    for (const auto& s : low) {
      lp::Constraint c;
      c.coefficients.assign(dim + 1, Rational(0));
      for (std::size_t i = 0; i < dim; ++i) c.coefficients[i] = -Rational(s[i]);
      c.coefficients[dim] = 1;
      c.relation = lp::Relation::LessEqual;
      c.rhs = 0;
      problem.constraints.push_back(std::move(c));
    }
    lp::Constraint simplex;
    simplex.coefficients.assign(dim + 1, Rational(1));
    simplex.coefficients[dim] = 0;
    simplex.relation = lp::Relation::Equal;
    simplex.rhs = 1;
    problem.constraints.push_back(std::move(simplex));
    auto result = lp::maximize(problem);
    if (result.status != lp::Status::Optimal) throw std::logic_error("tropical LP did not reach an optimum");
    if (!best || result.value > best->gap)
      best = SideOptimum{result.value, std::vector<Rational>(result.solution.begin(), result.solution.begin() + static_cast<std::ptrdiff_t>(dim))};
  }
  return *best;
}

}  // namespace

TropicalCheck check_tropical(const SparsePoly& p, const SparsePoly& q, bool strict) {
  require_nonzero(p, q);
  const auto sp = newton_support(p);
  const auto sq = newton_support(q);
  TropicalCheck check;

  auto upper = max_side_gap(sp, sq, p.dim());
  check.max_gap = upper.gap;
  auto& mx = check.max_side = make_condition("tropical-max", "tropical", strict);
  mx.holds_nonstrict = upper.gap <= 0;
  mx.holds_strict = upper.gap < 0;
  finish(mx);
  if (!mx.holds || !mx.holds_nonstrict)
    mx.witness = Witness::at(TropicalPoint{upper.beta, TropicalSide::Max}, support_max(p, upper.beta), support_max(q, upper.beta));

  auto lower = min_side_gap(sp, sq, p.dim());
  check.min_gap = lower.gap;
  auto& mn = check.min_side = make_condition("tropical-min", "tropical-op", strict);
  mn.holds_nonstrict = lower.gap <= 0;
  mn.holds_strict = lower.gap < 0;
  finish(mn);
  if (!mn.holds || !mn.holds_nonstrict)
    mn.witness = Witness::at(TropicalPoint{lower.beta, TropicalSide::Min}, support_min(p, lower.beta), support_min(q, lower.beta));
  return check;
}

// ---------------------------------------------------------------------------
// Evaluations

std::vector<std::vector<Rational>> sample_box(std::size_t dim, EvalSide side, const SamplingConfig& config) {
  if (config.box_radius <= 1) throw std::invalid_argument("box radius must exceed 1");
  const double log_radius = log_rational(config.box_radius);
  auto snap = [&](double value) {
    Rational r(static_cast<long>(std::llround(value * 1024.0)), 1024L);
    r.canonicalize();
    if (r < 1) r = 1;
    if (r > config.box_radius) r = config.box_radius;
    return r;
  };

  std::vector<std::vector<Rational>> points;
  // Log-uniform grid with exact endpoints 1 and R.
  std::vector<Rational> axis;
  const int g = std::max(config.grid_per_axis, 2);
  for (int k = 0; k < g; ++k) {
    if (k == 0)
      axis.push_back(1);
    else if (k == g - 1)
      axis.push_back(config.box_radius);
    else
      axis.push_back(snap(std::exp(log_radius * k / (g - 1))));
  }
  std::vector<std::size_t> index(dim, 0);
  while (true) {
    std::vector<Rational> point(dim);
    bool all_one = true;
    for (std::size_t i = 0; i < dim; ++i) {
      point[i] = axis[index[i]];
      if (index[i] != 0) all_one = false;
    }
    if (!all_one) points.push_back(std::move(point));
    std::size_t i = 0;
    while (i < dim && ++index[i] == axis.size()) index[i++] = 0;
    if (i == dim) break;
  }

  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int n = 0; n < config.random_points; ++n) {
    std::vector<Rational> point(dim);
    bool all_one = true;
    for (auto& c : point) {
      c = snap(std::exp(log_radius * unit(rng)));
      if (c != 1) all_one = false;
    }
    if (all_one) point[0] = snap(2.0 <= config.box_radius.get_d() ? 2.0 : config.box_radius.get_d());
    points.push_back(std::move(point));
  }

  if (side == EvalSide::Lower)
    for (auto& point : points)
      for (auto& c : point) c = 1 / c;
  return points;
}

namespace {

using SignedPoly = std::map<ExponentVector, Rational, GradedLexLess>;

void accumulate(SignedPoly& into, const ExponentVector& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = into.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) into.erase(it);
  }
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// sum_alpha c_alpha prod_i (1 + T_i)^{power_i(alpha)}
SignedPoly expand_shift(const SignedPoly& f, std::size_t dim,
                        const std::function<std::uint32_t(const ExponentVector&, std::size_t)>& power) {
  SignedPoly out;
  for (const auto& [alpha, c] : f) {
    SignedPoly partial;
    partial[ExponentVector(dim)] = c;
    for (std::size_t i = 0; i < dim; ++i) {
      std::uint32_t n = power(alpha, i);
      if (n == 0) continue;
      SignedPoly next;
      for (const auto& [e, v] : partial)
        for (std::uint32_t k = 0; k <= n; ++k) {
          ExponentVector e2 = e;
          e2[i] += k;
          accumulate(next, e2, v * Rational(binomial(n, k)));
        }
      partial = std::move(next);
    }
    for (const auto& [e, v] : partial) accumulate(out, e, v);
  }
  return out;
}

}  // namespace

std::pair<bool, bool> shift_certificate(const SparsePoly& p, const SparsePoly& q, EvalSide side) {
  require_mass_equal(p, q);
  const std::size_t dim = p.dim();
  SignedPoly shifted;
  if (side == EvalSide::Upper) {
    SignedPoly diff;  // q - p
    for (const auto& [e, c] : q.terms()) accumulate(diff, e, c);
    for (const auto& [e, c] : p.terms()) accumulate(diff, e, -c);
    shifted = expand_shift(diff, dim, [](const ExponentVector& a, std::size_t i) { return a[i]; });
  } else {
    // p - q at X = 1/(1+T), multiplied by prod (1+T_i)^{D_i}.
    std::vector<std::uint32_t> top(dim, 0);
    for (const auto* poly : {&p, &q})
      for (const auto& [e, c] : poly->terms())
        for (std::size_t i = 0; i < dim; ++i) top[i] = std::max(top[i], e[i]);
    SignedPoly diff;
    for (const auto& [e, c] : p.terms()) accumulate(diff, e, c);
    for (const auto& [e, c] : q.terms()) accumulate(diff, e, -c);
    shifted = expand_shift(diff, dim, [&top](const ExponentVector& a, std::size_t i) { return top[i] - a[i]; });
  }
  bool nonnegative = true;
  for (const auto& [e, c] : shifted)
    if (c < 0) nonnegative = false;
  bool strict = nonnegative;
  for (std::size_t i = 0; i < dim && strict; ++i) {
    auto it = shifted.find(ExponentVector::unit(dim, i));
    if (it == shifted.end() || it->second <= 0) strict = false;
  }
  return {nonnegative, strict};
}

namespace {

// Sampled verdict for one box: lhs/rhs oriented so that the condition reads lhs < rhs.
void sample_side(const SparsePoly& p, const SparsePoly& q, EvalSide side, const SamplingConfig& config,
                 ConditionResult& c) {
  c.holds_nonstrict = c.holds_strict = true;
  std::optional<Witness> equality;
  for (const auto& r : sample_box(p.dim(), side, config)) {
    Rational pv = eval(p, r), qv = eval(q, r);
    Rational gap = side == EvalSide::Upper ? Rational(qv - pv) : Rational(pv - qv);
    if (gap < 0) {
      c.holds_nonstrict = c.holds_strict = false;
      c.witness = Witness::at(EvalPoint{r, side}, pv, qv);
      return;
    }
    if (gap == 0 && !equality) {
      c.holds_strict = false;
      equality = Witness::at(EvalPoint{r, side}, pv, qv);
    }
  }
  if (!c.holds_strict) c.witness = equality;
}

void sturm_side(const SparsePoly& p, const SparsePoly& q, EvalSide side, ConditionResult& c) {
  // Upper: q - p > 0 on (1, inf). Lower: p - q > 0 on (0, 1).
  auto f = side == EvalSide::Upper ? sturm::UPoly::difference(q, p) : sturm::UPoly::difference(p, q);
  auto sign = side == EvalSide::Upper ? sturm::analyze(f, Rational(1), std::nullopt)
                                      : sturm::analyze(f, Rational(0), Rational(1));
  c.holds_nonstrict = sign.nonnegative;
  c.holds_strict = sign.positive;
  if (sign.witness) {
    std::vector<Rational> r{*sign.witness};
    c.witness = Witness::at(EvalPoint{r, side}, eval(p, r), eval(q, r));
    c.witness->exact = sign.witness_exact;
  }
}

}  // namespace

EvaluationCheck check_evaluations(const SparsePoly& p, const SparsePoly& q, EvaluationMode mode, bool strict,
                                  const SamplingConfig& config) {
  require_mass_equal(p, q);
  EvaluationCheck check;
  check.upper = make_condition("evaluation-upper", "real", strict);
  check.lower = make_condition("evaluation-lower", "real-op", strict);
  for (auto side : {EvalSide::Upper, EvalSide::Lower}) {
    auto& c = side == EvalSide::Upper ? check.upper : check.lower;
    if (mode == EvaluationMode::Sampled) {
      c.mode = VerificationMode::Sampled;
      sample_side(p, q, side, config, c);
    } else if (p.dim() == 1) {
      c.mode = VerificationMode::Exact;
      sturm_side(p, q, side, c);
    } else {
      auto [nonstrict_ok, strict_ok] = shift_certificate(p, q, side);
      bool certified = strict ? strict_ok : nonstrict_ok;
      if (certified) {
        c.mode = VerificationMode::ExactSufficient;
        c.holds_nonstrict = true;
        c.holds_strict = strict_ok;
      } else {
        c.mode = VerificationMode::Sampled;
        sample_side(p, q, side, config, c);
        if (nonstrict_ok) c.holds_nonstrict = true;
      }
    }
    if (c.holds_nonstrict && c.holds_strict) c.witness.reset();
    finish(c);
    if (c.holds) c.witness.reset();
  }
  return check;
}

// ---------------------------------------------------------------------------

bool SpectralReport::all_hold() const {
  for (const auto& c : conditions)
    if (!c.holds) return false;
  return true;
}

bool SpectralReport::all_exact() const {
  for (const auto& c : conditions)
    if (c.mode == VerificationMode::Sampled) return false;
  return true;
}

SpectralReport spectral_report(const SparsePoly& p, const SparsePoly& q, bool strict, EvaluationMode mode,
                               const SamplingConfig& config) {
  require_nonzero(p, q);
  SpectralReport report;
  report.strict = strict;
  report.mass_equal = mass(p) == mass(q);

  auto mass_condition = make_condition("mass", "degenerate", false);
  mass_condition.holds_nonstrict = mass_condition.holds_strict = report.mass_equal;
  finish(mass_condition);
  if (!report.mass_equal) {
    mass_condition.witness = Witness{"degenerate", "", ones(p.dim()), mass(p), mass(q), true};
  }
  report.conditions.push_back(mass_condition);

  if (report.mass_equal) report.conditions.push_back(check_derivations(p, q, strict).condition);
  auto tropical = check_tropical(p, q, strict);
  report.conditions.push_back(tropical.max_side);
  report.conditions.push_back(tropical.min_side);
  if (report.mass_equal) {
    auto evaluations = check_evaluations(p, q, mode, strict, config);
    report.conditions.push_back(evaluations.upper);
    report.conditions.push_back(evaluations.lower);
  }
  return report;
}

// ---------------------------------------------------------------------------

double LcValue::value() const {
  if (ratio) return log_rational(*ratio) / log_rational(*base);
  return exact.get_d();
}

bool LcValue::operator==(const LcValue& other) const {
  if (ratio.has_value() != other.ratio.has_value()) return false;
  if (ratio) {
    if (*base == *other.base) return *ratio == *other.ratio;
    // log a / log b == log c / log d is not decided for distinct bases
    throw std::invalid_argument("lc values at different evaluation points");
  }
  return exact == other.exact;
}

LcValue LcValue::operator+(const LcValue& other) const {
  if (ratio.has_value() != other.ratio.has_value()) throw std::invalid_argument("lc values of different kinds");
  LcValue sum;
  if (ratio) {
    if (*base != *other.base) throw std::invalid_argument("lc values at different evaluation points");
    sum.ratio = *ratio * *other.ratio;
    sum.base = *base;
    return sum;
  }
  sum.exact = exact + other.exact;
  return sum;
}

LcValue lc(const SparsePoly& x, const SparsePoly& y, const SpectrumPoint& point) {
  require_mass_equal(x, y);
  validate_point(point);
  LcValue out;
  if (const auto* e = std::get_if<EvalPoint>(&point)) {
    if (e->r.size() != x.dim()) throw DimensionMismatch("lc: point dimension");
    Rational u = 1;
    for (const auto& r : e->r) u *= r;
    if (u == 1) throw std::invalid_argument("lc: u(r) = 1 makes the comparison undefined");
    out.ratio = eval(y, e->r) / eval(x, e->r);
    out.base = u;
  } else if (const auto* t = std::get_if<TropicalPoint>(&point)) {
    if (t->beta.size() != x.dim()) throw DimensionMismatch("lc: point dimension");
    Rational hu = 0;
    for (const auto& b : t->beta) hu += b;
    out.exact = t->side == TropicalSide::Max ? Rational((support_max(y, t->beta) - support_max(x, t->beta)) / hu)
                                             : Rational((support_min(y, t->beta) - support_min(x, t->beta)) / hu);
  } else {
    const auto& gamma = std::get<DerivationPoint>(point).gamma;
    if (gamma.size() != x.dim()) throw DimensionMismatch("lc: point dimension");
    auto gx = gradient_at_one(x), gy = gradient_at_one(y);
    Rational diff = 0;
    for (std::size_t i = 0; i < gamma.size(); ++i) diff += gamma[i] * (gy[i] - gx[i]);
    out.exact = diff / mass(x);
  }
  return out;
}

}  // namespace vgl
