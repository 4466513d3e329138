#include "vgl/semifield.hpp"

#include <cmath>
#include <stdexcept>

namespace vgl {

namespace {

bool is_tropical(Model m) { return m == Model::Tropical || m == Model::TropicalOp; }
bool is_reversed(Model m) { return m == Model::RealOp || m == Model::TropicalOp; }

void same_model(const SemifieldValue& x, const SemifieldValue& y) {
  if (x.model() != y.model()) throw ModelMismatch("values from different models: " + to_string(x.model()) + " vs " + to_string(y.model()));
}

PartialOrderResult from_sign(int s) {
  if (s < 0) return PartialOrderResult::LE;
  if (s > 0) return PartialOrderResult::GE;
  return PartialOrderResult::EQ;
}

}  // namespace

std::string to_string(Model model) {
  switch (model) {
    case Model::Real:
      return "real";
    case Model::RealOp:
      return "real-op";
    case Model::Tropical:
      return "tropical";
    case Model::TropicalOp:
      return "tropical-op";
    case Model::Arctic:
      return "arctic";
  }
  return "unknown";
}

Model parse_model(std::string_view name) {
  for (Model m : {Model::Real, Model::RealOp, Model::Tropical, Model::TropicalOp, Model::Arctic})
    if (to_string(m) == name) return m;
  throw std::invalid_argument("unknown model '" + std::string(name) + "'");
}

std::string to_string(PartialOrderResult result) {
  switch (result) {
    case PartialOrderResult::LE:
      return "LE";
    case PartialOrderResult::GE:
      return "GE";
    case PartialOrderResult::EQ:
      return "EQ";
    case PartialOrderResult::INCOMPARABLE:
      return "INCOMPARABLE";
  }
  return "unknown";
}

std::string to_string(SemifieldType type) {
  switch (type) {
    case SemifieldType::MaxTropical:
      return "max-tropical";
    case SemifieldType::MaxTemperate:
      return "max-temperate";
    case SemifieldType::Arctic:
      return "arctic";
    case SemifieldType::MinTemperate:
      return "min-temperate";
    case SemifieldType::MinTropical:
      return "min-tropical";
    case SemifieldType::Untyped:
      return "untyped";
  }
  return "unknown";
}

SemifieldValue::SemifieldValue(Model model, Rational value, Rational dual)
    : model_(model), value_(std::move(value)), dual_(std::move(dual)) {
  if (value_ < 0) throw std::invalid_argument("semifield values must be nonnegative");
  if (model_ != Model::Arctic && dual_ != 0) throw std::invalid_argument("only arctic values carry a dual part");
  if (value_ == 0 && dual_ != 0) throw std::invalid_argument("arctic zero has no dual part");
}

SemifieldValue SemifieldValue::zero(Model model) { return SemifieldValue(model, 0); }
SemifieldValue SemifieldValue::one(Model model) { return SemifieldValue(model, 1); }

SemifieldValue SemifieldValue::natural(Model model, std::uint64_t n) {
  if (is_tropical(model)) return SemifieldValue(model, n == 0 ? 0 : 1);
  return SemifieldValue(model, Rational(static_cast<unsigned long>(n)));
}

std::string to_string(const SemifieldValue& x) {
  if (x.model() == Model::Arctic) return to_string(x.value()) + (x.dual() < 0 ? " - " : " + ") + to_string(abs(x.dual())) + "X";
  return to_string(x.value());
}

SemifieldValue sf_add(const SemifieldValue& x, const SemifieldValue& y) {
  same_model(x, y);
  if (is_tropical(x.model())) return x.value() >= y.value() ? x : y;
  return SemifieldValue(x.model(), x.value() + y.value(), x.dual() + y.dual());
}

SemifieldValue sf_mul(const SemifieldValue& x, const SemifieldValue& y) {
  same_model(x, y);
  return SemifieldValue(x.model(), x.value() * y.value(), x.value() * y.dual() + y.value() * x.dual());
}

SemifieldValue sf_inv(const SemifieldValue& x) {
  if (x.is_zero()) throw std::domain_error("inverse of zero");
  // (r + sX)^{-1} = r^{-2} (r - sX)
  Rational r2 = x.value() * x.value();
  return SemifieldValue(x.model(), 1 / x.value(), -x.dual() / r2);
}

SemifieldValue sf_pow(const SemifieldValue& x, std::int64_t n) {
  SemifieldValue base = n < 0 ? sf_inv(x) : x;
  std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-n) : static_cast<std::uint64_t>(n);
  SemifieldValue result = SemifieldValue::one(x.model());
  while (e > 0) {
    if (e & 1U) result = sf_mul(result, base);
    e >>= 1U;
    if (e > 0) base = sf_mul(base, base);
  }
  return result;
}

PartialOrderResult sf_compare(const SemifieldValue& x, const SemifieldValue& y) {
  same_model(x, y);
  if (x.model() == Model::Arctic) {
    if (x.value() != y.value()) return PartialOrderResult::INCOMPARABLE;
    return from_sign(sgn(x.dual() - y.dual()));
  }
  int s = sgn(x.value() - y.value());
  return from_sign(is_reversed(x.model()) ? -s : s);
}

bool sf_le(const SemifieldValue& x, const SemifieldValue& y) { return is_le(sf_compare(x, y)); }
bool sf_lt(const SemifieldValue& x, const SemifieldValue& y) { return sf_compare(x, y) == PartialOrderResult::LE; }
bool sf_approx(const SemifieldValue& x, const SemifieldValue& y) { return sf_compare(x, y) == PartialOrderResult::EQ; }

bool sf_connected(const SemifieldValue& x, const SemifieldValue& y) {
  same_model(x, y);
  if (x.model() == Model::Arctic) return x.value() == y.value();
  // the remaining models are totally ordered
  return true;
}

SemifieldType classify_sample(const SemifieldValue& x) {
  const Model m = x.model();
  const auto two = SemifieldValue::natural(m, 2);
  const auto inv = sf_inv(x);
  const auto s = x + inv;
  const auto two_x = two * x;
  const auto two_inv = two * inv;
  if (sf_approx(s, two_x)) return SemifieldType::MaxTropical;
  if (sf_lt(two, s) && sf_lt(s, two_x)) return SemifieldType::MaxTemperate;
  if (sf_approx(s, two)) return SemifieldType::Arctic;
  if (sf_lt(two_inv, s) && sf_lt(s, two)) return SemifieldType::MinTemperate;
  if (sf_approx(s, two_inv)) return SemifieldType::MinTropical;
  return SemifieldType::Untyped;
}

SemifieldType classify_type(Model model, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto one = SemifieldValue::one(model);
  std::optional<SemifieldType> type;
  int seen = 0;
  for (long attempt = 0; seen < samples && attempt < 1000L * samples; ++attempt) {
    auto x = sample_value(model, rng);
    if (!sf_lt(one, x)) continue;
    ++seen;
    auto t = classify_sample(x);
    if (t == SemifieldType::Untyped || (type && *type != t)) return SemifieldType::Untyped;
    type = t;
  }
  return type.value_or(SemifieldType::Untyped);
}

Model opposite(Model model) {
  switch (model) {
    case Model::Real:
      return Model::RealOp;
    case Model::RealOp:
      return Model::Real;
    case Model::Tropical:
      return Model::TropicalOp;
    case Model::TropicalOp:
      return Model::Tropical;
    case Model::Arctic:
      return Model::Arctic;
  }
  return model;
}

PartialOrderResult ambient_compare(const SemifieldValue& x, const SemifieldValue& y, const SemifieldValue& a,
                                   const SemifieldValue& b) {
  const auto left = a * y + b * x;
  const auto right = a * x + b * y;
  bool forward = sf_le(left, right);
  bool backward = sf_le(right, left);
  if (forward && backward) return PartialOrderResult::EQ;
  if (forward) return PartialOrderResult::LE;
  if (backward) return PartialOrderResult::GE;
  return PartialOrderResult::INCOMPARABLE;
}

PartialOrderResult ambient_compare(SaturatedNat x, SaturatedNat y, SaturatedNat a, SaturatedNat b,
                                   NatPreorder preorder) {
  const auto left = a * y + b * x;
  const auto right = a * x + b * y;
  auto le = [preorder](SaturatedNat s, SaturatedNat t) {
    return preorder == NatPreorder::Total ? s.value() <= t.value() : s == t;
  };
  bool forward = le(left, right);
  bool backward = le(right, left);
  if (forward && backward) return PartialOrderResult::EQ;
  if (forward) return PartialOrderResult::LE;
  if (backward) return PartialOrderResult::GE;
  return PartialOrderResult::INCOMPARABLE;
}

SemifieldValue default_u(Model model) {
  switch (model) {
    case Model::Real:
    case Model::Tropical:
      return SemifieldValue(model, 2);
    case Model::RealOp:
    case Model::TropicalOp:
      return SemifieldValue(model, Rational(1, 2));
    case Model::Arctic:
      return SemifieldValue(model, 1, 1);
  }
  return SemifieldValue::one(model);
}

double lev(const SemifieldValue& x, const SemifieldValue& u) {
  same_model(x, u);
  const auto one = SemifieldValue::one(x.model());
  if (x.is_zero() || !sf_connected(x, one)) throw std::invalid_argument("lev: x is not ~ 1");
  if (!sf_lt(one, u)) throw std::invalid_argument("lev: u must be > 1");
  if (x.model() == Model::Arctic) return arctic_lev(x, u).get_d();
  return log_rational(x.value()) / log_rational(u.value());
}

Rational arctic_lev(const SemifieldValue& x, const SemifieldValue& u) {
  if (x.model() != Model::Arctic || u.model() != Model::Arctic) throw ModelMismatch("arctic_lev needs arctic values");
  if (x.value() != 1) throw std::invalid_argument("lev: x is not ~ 1");
  if (u.value() != 1 || u.dual() <= 0) throw std::invalid_argument("lev: u must be > 1");
  return x.dual() / u.dual();
}

namespace {

Rational sample_offset(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> exponent(-3.0, 3.0);
  long thousandths = std::lround(std::pow(10.0, exponent(rng)) * 1000.0);
  if (thousandths < 1) thousandths = 1;
  Rational t(thousandths, 1000L);
  t.canonicalize();
  return t;
}

}  // namespace

SemifieldValue sample_value(Model model, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  if (model == Model::Arctic) {
    std::uniform_int_distribution<int> pick(0, 7);
    int kind = pick(rng);
    Rational r = 1;
    if (kind >= 6) {
      Rational t = 1 + sample_offset(rng);
      r = coin(rng) ? t : Rational(1 / t);
    }
    Rational s = kind == 5 ? Rational(0) : sample_offset(rng);
    if (coin(rng)) s = -s;
    return SemifieldValue(model, r, s);
  }
  Rational t = 1 + sample_offset(rng);
  return SemifieldValue(model, coin(rng) ? t : Rational(1 / t));
}

}  // namespace vgl
