#pragma once

/**
 * @file semifield.hpp
 * @brief The five model preordered semifields and the ambient preorder.
 *
 *   Real        (R+, +, *) with the usual order
 *   RealOp      same arithmetic, reversed order
 *   Tropical    (R+, max, *) with the usual order
 *   TropicalOp  same arithmetic, reversed order
 *   Arctic      r + sX in R[X]/(X^2), r > 0, ordered by r1 = r2 and s1 <= s2
 *
 * All values are exact rationals. Each model has a distinguished zero.
 */

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "vgl/rational.hpp"

namespace vgl {

enum class Model { Real, RealOp, Tropical, TropicalOp, Arctic };

std::string to_string(Model model);
/// Accepts real, real-op, tropical, tropical-op, arctic.
Model parse_model(std::string_view name);

enum class PartialOrderResult { LE, GE, EQ, INCOMPARABLE };
std::string to_string(PartialOrderResult result);

inline bool is_le(PartialOrderResult r) { return r == PartialOrderResult::LE || r == PartialOrderResult::EQ; }
inline bool is_ge(PartialOrderResult r) { return r == PartialOrderResult::GE || r == PartialOrderResult::EQ; }

enum class SemifieldType { MaxTropical, MaxTemperate, Arctic, MinTemperate, MinTropical, Untyped };
std::string to_string(SemifieldType type);

class ModelMismatch : public std::invalid_argument {
 public:
  explicit ModelMismatch(const std::string& what) : std::invalid_argument(what) {}
};

class SemifieldValue {
 public:
  /// Real/Tropical variants hold `value`; Arctic holds value + dual * X.
  SemifieldValue(Model model, Rational value, Rational dual = 0);

  static SemifieldValue zero(Model model);
  static SemifieldValue one(Model model);
  /// n * 1 (repeated addition of the unit).
  static SemifieldValue natural(Model model, std::uint64_t n);

  Model model() const { return model_; }
  const Rational& value() const { return value_; }
  const Rational& dual() const { return dual_; }
  bool is_zero() const { return value_ == 0; }

  bool operator==(const SemifieldValue&) const = default;

 private:
  Model model_;
  Rational value_;
  Rational dual_;
};

std::string to_string(const SemifieldValue& x);

SemifieldValue sf_add(const SemifieldValue& x, const SemifieldValue& y);
SemifieldValue sf_mul(const SemifieldValue& x, const SemifieldValue& y);
/// Throws std::domain_error for zero.
SemifieldValue sf_inv(const SemifieldValue& x);
/// Integer powers; negative exponents invert first.
SemifieldValue sf_pow(const SemifieldValue& x, std::int64_t n);

inline SemifieldValue operator+(const SemifieldValue& x, const SemifieldValue& y) { return sf_add(x, y); }
inline SemifieldValue operator*(const SemifieldValue& x, const SemifieldValue& y) { return sf_mul(x, y); }

/// Throws ModelMismatch for values of different models.
PartialOrderResult sf_compare(const SemifieldValue& x, const SemifieldValue& y);

bool sf_le(const SemifieldValue& x, const SemifieldValue& y);
bool sf_lt(const SemifieldValue& x, const SemifieldValue& y);
bool sf_approx(const SemifieldValue& x, const SemifieldValue& y);
/// x ~ y: x and y lie in the same connected component of the preorder.
bool sf_connected(const SemifieldValue& x, const SemifieldValue& y);

/// The values whose pairwise behaviour decides the type of a sample x > 1.
SemifieldType classify_sample(const SemifieldValue& x);

/// Unanimous type over `samples` random x > 1, or Untyped.
SemifieldType classify_type(Model model, int samples = 200, std::uint64_t seed = 42);

/// Reversing the order swaps Max and Min types.
Model opposite(Model model);

/// Relation between x and y in the ambient preorder a*y + b*x <= a*x + b*y.
PartialOrderResult ambient_compare(const SemifieldValue& x, const SemifieldValue& y, const SemifieldValue& a,
                                   const SemifieldValue& b);

/// N with every n >= 5 identified with 5.
class SaturatedNat {
 public:
  static constexpr std::uint32_t kCap = 5;
  explicit SaturatedNat(std::uint64_t n = 0) : value_(n > kCap ? kCap : static_cast<std::uint32_t>(n)) {}
  std::uint32_t value() const { return value_; }
  SaturatedNat operator+(SaturatedNat other) const { return SaturatedNat(std::uint64_t{value_} + other.value_); }
  SaturatedNat operator*(SaturatedNat other) const { return SaturatedNat(std::uint64_t{value_} * other.value_); }
  bool operator==(const SaturatedNat&) const = default;

 private:
  std::uint32_t value_;
};

/// Total preorder inherited from N, or the trivial (equality) preorder.
enum class NatPreorder { Total, Trivial };

PartialOrderResult ambient_compare(SaturatedNat x, SaturatedNat y, SaturatedNat a, SaturatedNat b,
                                   NatPreorder preorder = NatPreorder::Total);

/// The element u > 1 used for logarithmic evaluation in each model (2, 1/2, 2, 1/2, 1 + X).
SemifieldValue default_u(Model model);

/**
 * Rate of x ~ 1 relative to u > 1: the unique r with x^q > u^p for p/q < r
 * and x^q < u^p for p/q > r. Throws std::invalid_argument when x is not ~ 1
 * or u is not > 1.
 */
double lev(const SemifieldValue& x, const SemifieldValue& u);
/// Exact rate in the arctic model: s_x / s_u for x = 1 + s_x X, u = 1 + s_u X.
Rational arctic_lev(const SemifieldValue& x, const SemifieldValue& u);

/// Random nonzero element: 1 + t or 1/(1 + t) with t log-uniform in [1e-3, 1e3]
/// snapped to a multiple of 1/1000; arctic values mostly have unit real part.
SemifieldValue sample_value(Model model, std::mt19937_64& rng);

}  // namespace vgl
