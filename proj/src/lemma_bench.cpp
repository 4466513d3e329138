#include "vgl/lemma_bench.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <functional>
#include <sstream>

namespace vgl {

namespace {

using Value = SemifieldValue;
using Rng = std::mt19937_64;

/// nullopt: hypotheses not met. Otherwise whether the conclusion held, plus a description.
using TrialResult = std::optional<std::pair<bool, std::string>>;
using Trial = std::function<TrialResult(Model, Rng&)>;

struct LemmaEntry {
  std::string name;
  std::string statement;
  std::vector<Model> models;
  Trial trial;
};

Value nat(Model m, std::uint64_t n) { return Value::natural(m, n); }
Value one(Model m) { return Value::one(m); }
Value inv(const Value& x) { return sf_inv(x); }
Value pw(const Value& x, std::int64_t n) { return sf_pow(x, n); }
bool le(const Value& a, const Value& b) { return sf_le(a, b); }
bool ge(const Value& a, const Value& b) { return sf_le(b, a); }
bool lt(const Value& a, const Value& b) { return sf_lt(a, b); }
bool approx(const Value& a, const Value& b) { return sf_approx(a, b); }

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

bool weakly_above_two(const Value& x) { return ge(x + inv(x), nat(x.model(), 2)); }

std::string describe(std::initializer_list<std::pair<const char*, std::string>> items) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, value] : items) {
    out << (first ? "" : ", ") << key << "=" << value;
    first = false;
  }
  return out.str();
}

std::string str(const Value& v) { return to_string(v); }
std::string str(long v) { return std::to_string(v); }

/// Laurent polynomial with natural coefficients: exponent -> coefficient.
using Laurent = std::map<int, std::uint64_t>;

Laurent random_laurent(Rng& rng) {
  Laurent p;
  int terms = uniform(rng, 1, 4);
  for (int i = 0; i < terms; ++i) p[uniform(rng, -3, 3)] += static_cast<std::uint64_t>(uniform(rng, 1, 3));
  return p;
}

std::uint64_t laurent_mass(const Laurent& p) {
  std::uint64_t total = 0;
  for (const auto& [e, c] : p) total += c;
  return total;
}

long laurent_slope(const Laurent& p) {
  long total = 0;
  for (const auto& [e, c] : p) total += static_cast<long>(e) * static_cast<long>(c);
  return total;
}

Value laurent_eval(const Laurent& p, const Value& x) {
  Value total = Value::zero(x.model());
  for (const auto& [e, c] : p) total = total + nat(x.model(), c) * pw(x, e);
  return total;
}

std::string laurent_string(const Laurent& p) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p) {
    out << (first ? "" : " + ") << c << "*X^" << e;
    first = false;
  }
  return out.str();
}

/// Moves one unit of mass down at one exponent and one unit up at another,
/// preserving p(1) and p'(1).
Laurent balanced_move(Laurent p, Rng& rng) {
  std::vector<int> units;
  for (const auto& [e, c] : p)
    for (std::uint64_t i = 0; i < c; ++i) units.push_back(e);
  if (units.size() < 2) return p;
  std::shuffle(units.begin(), units.end(), rng);
  int a = units[0], b = units[1];
  for (int e : {a, b})
    if (--p[e] == 0) p.erase(e);
  p[a - 1] += 1;
  p[b + 1] += 1;
  return p;
}

/// Shifts one unit of mass by +-1, changing p'(1) by +-1 and keeping p(1).
Laurent slope_move(Laurent p, Rng& rng) {
  auto it = p.begin();
  std::advance(it, uniform(rng, 0, static_cast<int>(p.size()) - 1));
  int e = it->first;
  if (--it->second == 0) p.erase(it);
  p[e + (uniform(rng, 0, 1) ? 1 : -1)] += 1;
  return p;
}

std::vector<LemmaEntry> build_entries() {
  const std::vector<Model> core{Model::Real, Model::Tropical, Model::Arctic};
  const std::vector<Model> all{Model::Real, Model::RealOp, Model::Tropical, Model::TropicalOp, Model::Arctic};
  std::vector<LemmaEntry> out;

  out.push_back({"power_lemma_i", "x + 1/x >= 2  =>  m x^n + n x^-m >= m + n", core, [](Model m, Rng& rng) -> TrialResult {
                     Value x = sample_value(m, rng);
                     if (!weakly_above_two(x)) return std::nullopt;
                     int a = uniform(rng, 0, 6), n = uniform(rng, 0, 6);
                     Value lhs = nat(m, a) * pw(x, n) + nat(m, n) * pw(x, -a);
                     return std::pair{ge(lhs, nat(m, a + n)), describe({{"x", str(x)}, {"m", str(a)}, {"n", str(n)}})};
                   }});

  out.push_back({"power_lemma_ii", "x + 1/x >= 2  =>  2^(n-1) (x^n + x^-n) >= (x + 1/x)^n", core, [](Model m, Rng& rng) -> TrialResult {
                     Value x = sample_value(m, rng);
                     if (!weakly_above_two(x)) return std::nullopt;
                     int n = uniform(rng, 1, 6);
                     Value lhs = nat(m, 1ULL << (n - 1)) * (pw(x, n) + pw(x, -n));
                     Value rhs = pw(x + inv(x), n);
                     return std::pair{ge(lhs, rhs), describe({{"x", str(x)}, {"n", str(n)}})};
                   }});

  out.push_back({"power_lemma_iii", "x + 1/x >= 2  =>  x^(m+n) + 1 >= x^m + x^n", core, [](Model m, Rng& rng) -> TrialResult {
                     Value x = sample_value(m, rng);
                     if (!weakly_above_two(x)) return std::nullopt;
                     int a = uniform(rng, 0, 6), n = uniform(rng, 0, 6);
                     return std::pair{ge(pw(x, a + n) + one(m), pw(x, a) + pw(x, n)),
                                      describe({{"x", str(x)}, {"m", str(a)}, {"n", str(n)}})};
                   }});

  out.push_back({"power_lemma_strict", "x + x^-2 > 2  =>  (i), (iii) strict for m,n >= 1 and (ii) strict for n >= 2",
                   {Model::Real}, [](Model m, Rng& rng) -> TrialResult {
                     Value x = sample_value(m, rng);
                     if (!lt(nat(m, 2), x + pw(x, -2))) return std::nullopt;
                     int a = uniform(rng, 1, 6), n = uniform(rng, 1, 6), k = uniform(rng, 2, 6);
                     bool i = lt(nat(m, a + n), nat(m, a) * pw(x, n) + nat(m, n) * pw(x, -a));
                     bool ii = lt(pw(x + inv(x), k), nat(m, 1ULL << (k - 1)) * (pw(x, k) + pw(x, -k)));
                     bool iii = lt(pw(x, a) + pw(x, n), pw(x, a + n) + one(m));
                     return std::pair{i && ii && iii, describe({{"x", str(x)}, {"m", str(a)}, {"n", str(n)}, {"n_ii", str(k)}})};
                   }});

  out.push_back({"norder", "x + 1/x >= 2  =>  x^n + x^-n >= 2", core, [](Model m, Rng& rng) -> TrialResult {
                     Value x = sample_value(m, rng);
                     if (!weakly_above_two(x)) return std::nullopt;
                     int n = uniform(rng, 0, 6);
                     return std::pair{ge(pw(x, n) + pw(x, -n), nat(m, 2)), describe({{"x", str(x)}, {"n", str(n)}})};
                   }});

  out.push_back({"norder_strict", "x + 1/x > 2  =>  x^n + x^-n > 2 for n >= 1", {Model::Real}, [](Model m, Rng& rng) -> TrialResult {
                     Value x = sample_value(m, rng);
                     if (!lt(nat(m, 2), x + inv(x))) return std::nullopt;
                     int n = uniform(rng, 1, 6);
                     return std::pair{lt(nat(m, 2), pw(x, n) + pw(x, -n)), describe({{"x", str(x)}, {"n", str(n)}})};
                   }});

  out.push_back({"other_power_lemma", "x >= 1, x^(n+1) + 1 <= x^n + 1  =>  (x + 1)^m <= 2^m x^n", {Model::TropicalOp},
                   [](Model m, Rng& rng) -> TrialResult {
                     Value x = sample_value(m, rng);
                     int n = uniform(rng, 0, 6);
                     if (!le(one(m), x) || !le(pw(x, n + 1) + one(m), pw(x, n) + one(m))) return std::nullopt;
                     int k = uniform(rng, 0, 6);
                     return std::pair{le(pw(x + one(m), k), nat(m, 1ULL << k) * pw(x, n)),
                                      describe({{"x", str(x)}, {"n", str(n)}, {"m", str(k)}})};
                   }});

  out.push_back({"nonarctic_bound", "x >= 1, x^2 + 2 >= 3x  =>  x^(n+1) + 1 >= 2 x^n", {Model::Real, Model::Tropical},
                   [](Model m, Rng& rng) -> TrialResult {
                     Value x = sample_value(m, rng);
                     if (!le(one(m), x) || !ge(pw(x, 2) + nat(m, 2), nat(m, 3) * x)) return std::nullopt;
                     int n = uniform(rng, 0, 6);
                     return std::pair{ge(pw(x, n + 1) + one(m), nat(m, 2) * pw(x, n)), describe({{"x", str(x)}, {"n", str(n)}})};
                   }});

  out.push_back({"power_square", "x + 1/x ~= 2  =>  x^n + x^-n ~= 2, m x^n + n x^-m ~= m + n, x^m + x^n ~= x^(m+n) + 1",
                   {Model::Arctic}, [](Model m, Rng& rng) -> TrialResult {
                     Value x = sample_value(m, rng);
                     if (!approx(x + inv(x), nat(m, 2))) return std::nullopt;
                     int a = uniform(rng, 0, 6), n = uniform(rng, 0, 6);
                     bool i = approx(pw(x, n) + pw(x, -n), nat(m, 2));
                     bool ii = approx(nat(m, a) * pw(x, n) + nat(m, n) * pw(x, -a), nat(m, a + n));
                     bool iii = approx(pw(x, a) + pw(x, n), pw(x, a + n) + one(m));
                     return std::pair{i && ii && iii, describe({{"x", str(x)}, {"m", str(a)}, {"n", str(n)}})};
                   }});

  out.push_back({"super_general", "x + 1/x >= 2  =>  (a + x^(l+m+n))(a + x^l) >= (a + x^(l+m))(a + x^(l+n)), ~= when x + 1/x ~= 2",
                   core, [](Model m, Rng& rng) -> TrialResult {
                     Value x = sample_value(m, rng);
                     if (!weakly_above_two(x)) return std::nullopt;
                     Value a = uniform(rng, 0, 9) == 0 ? Value::zero(m) : sample_value(m, rng);
                     int l = uniform(rng, -3, 3), k = uniform(rng, 0, 4), n = uniform(rng, 0, 4);
                     Value lhs = (a + pw(x, l + k + n)) * (a + pw(x, l));
                     Value rhs = (a + pw(x, l + k)) * (a + pw(x, l + n));
                     bool ok = ge(lhs, rhs);
                     if (approx(x + inv(x), nat(m, 2))) ok = ok && approx(lhs, rhs);
                     return std::pair{ok, describe({{"x", str(x)}, {"a", str(a)}, {"l", str(l)}, {"m", str(k)}, {"n", str(n)}})};
                   }});

  out.push_back({"cancel1", "x + 1/x >= 2, y >= 1, x + 1 <= y + 1  =>  x^n <= y^(n+1)", core, [](Model m, Rng& rng) -> TrialResult {
                     Value x = sample_value(m, rng), y = sample_value(m, rng);
                     if (!weakly_above_two(x) || !le(one(m), y) || !le(x + one(m), y + one(m))) return std::nullopt;
                     int n = uniform(rng, 0, 6);
                     return std::pair{le(pw(x, n), pw(y, n + 1)), describe({{"x", str(x)}, {"y", str(y)}, {"n", str(n)}})};
                   }});

  out.push_back({"cancel2", "x + 1/x >= 2, y >= 1, a + x <= a + y, 1/a + x <= 1/a + y  =>  x^n <= y^(n+1)", core,
                   [](Model m, Rng& rng) -> TrialResult {
                     Value a = sample_value(m, rng), x = sample_value(m, rng), y = sample_value(m, rng);
                     if (!weakly_above_two(x) || !le(one(m), y) || !le(a + x, a + y) || !le(inv(a) + x, inv(a) + y))
                       return std::nullopt;
                     int n = uniform(rng, 0, 6);
                     return std::pair{le(pw(x, n), pw(y, n + 1)),
                                      describe({{"a", str(a)}, {"x", str(x)}, {"y", str(y)}, {"n", str(n)}})};
                   }});

  out.push_back({"add_to_mult", "x + 1 <= y + 1, p in N[X] with all coefficients up to deg p positive  =>  p(x) <= p(y)", all,
                   [](Model m, Rng& rng) -> TrialResult {
                     Value x = sample_value(m, rng), y = sample_value(m, rng);
                     if (!le(x + one(m), y + one(m))) return std::nullopt;
                     int degree = uniform(rng, 0, 4);
                     Value px = Value::zero(m), py = Value::zero(m);
                     std::string poly;
                     for (int i = 0; i <= degree; ++i) {
                       int c = uniform(rng, 1, 3);
                       px = px + nat(m, c) * pw(x, i);
                       py = py + nat(m, c) * pw(y, i);
                       poly += (i ? " + " : "") + std::to_string(c) + "*X^" + std::to_string(i);
                     }
                     return std::pair{le(px, py), describe({{"x", str(x)}, {"y", str(y)}, {"p", poly}})};
                   }});

  out.push_back({"power_skew3", "x + 1/x >= 2  =>  C(n+2,2) x^n <= C(n+1,2) x^(n+1) + sum_{j<=n} x^j", core,
                   [](Model m, Rng& rng) -> TrialResult {
                     Value x = sample_value(m, rng);
                     if (!weakly_above_two(x)) return std::nullopt;
                     int n = uniform(rng, 0, 6);
                     Value rhs = nat(m, choose(n + 1, 2)) * pw(x, n + 1);
                     for (int j = 0; j <= n; ++j) rhs = rhs + pw(x, j);
                     return std::pair{le(nat(m, choose(n + 2, 2)) * pw(x, n), rhs), describe({{"x", str(x)}, {"n", str(n)}})};
                   }});

  out.push_back({"arctic_main", "x ~ 1, y ~ 1  =>  x + y ~= xy + 1", {Model::Arctic}, [](Model m, Rng& rng) -> TrialResult {
                     Value x = sample_value(m, rng), y = sample_value(m, rng);
                     if (!sf_connected(x, one(m)) || !sf_connected(y, one(m))) return std::nullopt;
                     return std::pair{approx(x + y, x * y + one(m)), describe({{"x", str(x)}, {"y", str(y)}})};
                   }});

  out.push_back({"arctic_formula_i", "x ~ 1, p in N[X, 1/X] nonzero  =>  p(x) ~= x^p'(1) + (p(1) - 1)", {Model::Arctic},
                   [](Model m, Rng& rng) -> TrialResult {
                     Value x = sample_value(m, rng);
                     if (!sf_connected(x, one(m))) return std::nullopt;
                     Laurent p = random_laurent(rng);
                     Value rhs = pw(x, laurent_slope(p)) + nat(m, laurent_mass(p) - 1);
                     return std::pair{approx(laurent_eval(p, x), rhs), describe({{"x", str(x)}, {"p", laurent_string(p)}})};
                   }});

  out.push_back({"arctic_formula_ii", "x ~ 1, x != 1  =>  (p(x) ~= q(x)  <=>  p(1) = q(1) and p'(1) = q'(1))", {Model::Arctic},
                   [](Model m, Rng& rng) -> TrialResult {
                     Value x = sample_value(m, rng);
                     if (!sf_connected(x, one(m)) || approx(x, one(m))) return std::nullopt;
                     Laurent p = random_laurent(rng);
                     int pick = uniform(rng, 0, 2);
                     Laurent q = pick == 0 ? balanced_move(p, rng) : pick == 1 ? slope_move(p, rng) : random_laurent(rng);
                     bool expected = laurent_mass(p) == laurent_mass(q) && laurent_slope(p) == laurent_slope(q);
                     bool actual = approx(laurent_eval(p, x), laurent_eval(q, x));
                     return std::pair{expected == actual,
                                      describe({{"x", str(x)}, {"p", laurent_string(p)}, {"q", laurent_string(q)}})};
                   }});

  out.push_back({"arctic_formula_iii", "x > 1  =>  (p(x) <= q(x)  <=>  p(1) = q(1) and p'(1) <= q'(1))", {Model::Arctic},
                   [](Model m, Rng& rng) -> TrialResult {
                     Value x = sample_value(m, rng);
                     if (!lt(one(m), x)) return std::nullopt;
                     Laurent p = random_laurent(rng);
                     int pick = uniform(rng, 0, 2);
                     Laurent q = pick == 0 ? balanced_move(p, rng) : pick == 1 ? slope_move(p, rng) : random_laurent(rng);
                     bool expected = laurent_mass(p) == laurent_mass(q) && laurent_slope(p) <= laurent_slope(q);
                     bool actual = le(laurent_eval(p, x), laurent_eval(q, x));
                     return std::pair{expected == actual,
                                      describe({{"x", str(x)}, {"p", laurent_string(p)}, {"q", laurent_string(q)}})};
                   }});

  out.push_back({"tropical_add_full", "x ~ y  =>  x + y ~= 2 max(x, y) (2 min(x, y) in the opposite model)",
                   {Model::Tropical, Model::TropicalOp}, [](Model m, Rng& rng) -> TrialResult {
                     Value x = sample_value(m, rng), y = sample_value(m, rng);
                     if (!sf_connected(x, y)) return std::nullopt;
                     const Value& top = le(x, y) ? y : x;
                     const Value& bottom = le(x, y) ? x : y;
                     const Value& extreme = m == Model::Tropical ? top : bottom;
                     return std::pair{approx(x + y, nat(m, 2) * extreme), describe({{"x", str(x)}, {"y", str(y)}})};
                   }});

  out.push_back({"rate_lem", "x ~ 1: p/q < lev(x) => x^q > u^p and p/q > lev(x) => x^q < u^p", all,
                   [](Model m, Rng& rng) -> TrialResult {
                     Value x = sample_value(m, rng);
                     Value u = default_u(m);
                     if (!sf_connected(x, one(m))) return std::nullopt;
                     long p = uniform(rng, -20, 20), q = uniform(rng, 1, 10);
                     int side;  // -1: p/q below the rate, +1: above
                     if (m == Model::Arctic) {
                       Rational rate = arctic_lev(x, u);
                       Rational frac(p, q);
                       frac.canonicalize();
                       if (frac == rate) return std::nullopt;
                       side = frac < rate ? -1 : 1;
                     } else {
                       double rate = lev(x, u);
                       double frac = static_cast<double>(p) / static_cast<double>(q);
                       if (std::abs(frac - rate) < 1e-9) return std::nullopt;
                       side = frac < rate ? -1 : 1;
                     }
                     Value xq = pw(x, q), up = pw(u, p);
                     bool ok = side < 0 ? lt(up, xq) : lt(xq, up);
                     return std::pair{ok, describe({{"x", str(x)}, {"p", str(p)}, {"q", str(q)}})};
                   }});
  return out;
}

const std::vector<LemmaEntry>& entries() {
  static const std::vector<LemmaEntry> all = build_entries();
  return all;
}

}  // namespace

bool LemmaBenchReport::ok() const {
  for (const auto& l : lemmas)
    if (!l.ok()) return false;
  return true;
}

bool LemmaBenchReport::complete() const {
  for (const auto& l : lemmas)
    if (l.applicable && l.samples < requested) return false;
  return true;
}

std::vector<std::string> lemma_names() {
  std::vector<std::string> names;
  for (const auto& s : entries()) names.push_back(s.name);
  return names;
}

LemmaBenchReport lemma_bench(Model model, long samples, std::uint64_t seed) {
  LemmaBenchReport report;
  report.model = model;
  report.requested = samples;
  report.seed = seed;
  std::uint64_t index = 0;
  for (const auto& entry : entries()) {
    LemmaOutcome outcome;
    outcome.name = entry.name;
    outcome.statement = entry.statement;
    outcome.model = model;
    outcome.applicable = std::find(entry.models.begin(), entry.models.end(), model) != entry.models.end();
    if (outcome.applicable) {
      // Independent stream per lemma so adding a lemma leaves the others unchanged.
      std::seed_seq seq{seed, index, static_cast<std::uint64_t>(model)};
      Rng rng(seq);
      const long max_attempts = 500 * samples + 1000;
      while (outcome.samples < samples && outcome.attempts < max_attempts) {
        ++outcome.attempts;
        auto result = entry.trial(model, rng);
        if (!result) continue;
        ++outcome.samples;
        if (result->first)
          ++outcome.passes;
        else if (!outcome.counterexample)
          outcome.counterexample = result->second;
      }
    }
    report.lemmas.push_back(std::move(outcome));
    ++index;
  }
  return report;
}

}  // namespace vgl
