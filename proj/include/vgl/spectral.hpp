#pragma once

/**
 * @file spectral.hpp
 * @brief Spectral conditions for Q+[X1..Xd] with X_i >= 1.
 *
 * The monotone homomorphisms and derivations that test p <= q come in five
 * families:
 *
 *  - evaluation at r in [1,inf)^d \ {1}            (values in R+)
 *  - evaluation at r in (0,1]^d \ {1}              (values in R+^op)
 *  - max of <beta, s> over the support, beta >= 0  (tropical)
 *  - min of <beta, s> over the support, beta >= 0  (opposite tropical)
 *  - f -> <gamma, grad f(1)>, sum gamma = 1        (derivations at the degenerate point 1)
 *
 * Tropical and derivation directions are normalized to the unit simplex.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "vgl/poly.hpp"
#include "vgl/rational.hpp"

namespace vgl {

enum class EvalSide { Upper, Lower };
enum class TropicalSide { Max, Min };

struct EvalPoint {
  std::vector<Rational> r;
  EvalSide side = EvalSide::Upper;
};

struct TropicalPoint {
  std::vector<Rational> beta;
  TropicalSide side = TropicalSide::Max;
};

struct DerivationPoint {
  std::vector<Rational> gamma;
};

using SpectrumPoint = std::variant<EvalPoint, TropicalPoint, DerivationPoint>;

/// Throws std::invalid_argument unless the point satisfies its family's constraints.
void validate_point(const SpectrumPoint& point);

/// max_{s in supp p} <beta, s> (any nonnegative beta).
Rational support_max(const SparsePoly& p, const std::vector<Rational>& beta);
/// min_{s in supp p} <beta, s>.
Rational support_min(const SparsePoly& p, const std::vector<Rational>& beta);

enum class VerificationMode { Exact, ExactSufficient, Sampled };
std::string to_string(VerificationMode mode);

/// Where a condition was tested, together with both sides of the inequality.
struct Witness {
  std::string kind;  ///< "degenerate", "evaluation", "tropical", "derivation"
  std::string side;  ///< "upper"/"lower", "max"/"min", or empty
  std::vector<Rational> coordinates;
  Rational lhs;  ///< value attached to p
  Rational rhs;  ///< value attached to q
  /// False only for roots that could be bracketed but not hit exactly.
  bool exact = true;

  static Witness at(const SpectrumPoint& point, Rational lhs, Rational rhs);
};

struct ConditionResult {
  std::string name;
  std::string family;
  bool strict = false;  ///< strictness that `holds` refers to
  bool holds = false;
  bool holds_nonstrict = false;
  bool holds_strict = false;
  VerificationMode mode = VerificationMode::Exact;
  std::optional<Witness> witness;
};

struct SamplingConfig {
  Rational box_radius = 8;
  int grid_per_axis = 5;
  int random_points = 200;
  std::uint64_t seed = 42;
};

enum class EvaluationMode { Exact, Sampled };

struct DerivationCheck {
  std::vector<Rational> lhs;  ///< grad p(1)
  std::vector<Rational> rhs;  ///< grad q(1)
  ConditionResult condition;
};

struct TropicalCheck {
  ConditionResult max_side;
  ConditionResult min_side;
  /// Optimal values of max over beta of h_p - h_q (max side) and min_p - min_q (min side).
  Rational max_gap;
  Rational min_gap;
};

struct EvaluationCheck {
  ConditionResult upper;
  ConditionResult lower;
};

bool check_mass(const SparsePoly& p, const SparsePoly& q);

/// Requires equal mass (throws std::invalid_argument otherwise).
DerivationCheck check_derivations(const SparsePoly& p, const SparsePoly& q, bool strict);

/// One exact LP per support point on each side.
TropicalCheck check_tropical(const SparsePoly& p, const SparsePoly& q, bool strict);

/**
 * p(r) < q(r) on the upper box and p(r) > q(r) on the lower box.
 *
 * Exact mode: Sturm analysis when d = 1; otherwise the shift certificate
 * (expand q - p in X_i = 1 + T_i), falling back to sampling when it is
 * inconclusive. Sampled mode only samples. Requires equal mass.
 */
EvaluationCheck check_evaluations(const SparsePoly& p, const SparsePoly& q, EvaluationMode mode, bool strict,
                                  const SamplingConfig& config = {});

/// Deterministic sample points of one box (rational, never the all-ones point).
std::vector<std::vector<Rational>> sample_box(std::size_t dim, EvalSide side, const SamplingConfig& config);

/// Shift certificate alone: {nonstrict certified, strict certified} for one side.
std::pair<bool, bool> shift_certificate(const SparsePoly& p, const SparsePoly& q, EvalSide side);

struct SpectralReport {
  bool mass_equal = false;
  bool strict = false;
  std::vector<ConditionResult> conditions;

  bool all_hold() const;
  /// Every condition was decided in Exact or ExactSufficient mode.
  bool all_exact() const;
};

SpectralReport spectral_report(const SparsePoly& p, const SparsePoly& q, bool strict, EvaluationMode mode,
                               const SamplingConfig& config = {});

/**
 * Logarithmic comparison value of a mass-equal pair at a spectrum point,
 * oriented so that x <= y gives a nonnegative value.
 *
 * Evaluation points: log(y(r)/x(r)) / log(u(r)) with u = X1...Xd, kept in
 * exact form as the pair (ratio, base). Tropical points: difference of the
 * support functions on the chosen side divided by h_u(beta) = sum beta.
 * Derivation points: (<gamma, grad y(1)> - <gamma, grad x(1)>) / mass(x).
 */
struct LcValue {
  std::optional<Rational> ratio;  ///< y(r)/x(r), evaluation points only
  std::optional<Rational> base;   ///< u(r), evaluation points only
  Rational exact;                 ///< value for tropical/derivation points

  double value() const;
  bool operator==(const LcValue& other) const;
  /// Sum of two values at the same point; evaluation bases must agree.
  LcValue operator+(const LcValue& other) const;
};

LcValue lc(const SparsePoly& x, const SparsePoly& y, const SpectrumPoint& point);

}  // namespace vgl
