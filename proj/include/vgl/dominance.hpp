#pragma once

/**
 * @file dominance.hpp
 * @brief Decision procedure for the semiring preorder generated by X_i >= 1.
 *
 * p <= q holds exactly when the coefficient mass of p can be moved onto the
 * coefficient mass of q using only moves that raise exponents componentwise.
 * A move (gamma -> gamma + alpha) of mass m corresponds to the summand
 * m X^gamma of h_alpha in the decomposition p = sum h_alpha,
 * q = sum h_alpha X^alpha.
 */

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "vgl/poly.hpp"

namespace vgl {

struct MoveLess {
  bool operator()(const std::pair<ExponentVector, ExponentVector>& a,
                  const std::pair<ExponentVector, ExponentVector>& b) const;
};

/// Upward mass transport between two coefficient maps.
class TransportPlan {
 public:
  using Move = std::pair<ExponentVector, ExponentVector>;
  using MoveMap = std::map<Move, Rational, MoveLess>;

  explicit TransportPlan(std::size_t dim = 1) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  const MoveMap& moves() const { return moves_; }
  bool empty() const { return moves_.empty(); }

  /// Accumulates mass on (from -> to). Zero masses are ignored.
  void add_move(const ExponentVector& from, const ExponentVector& to, const Rational& mass);

  /// The polynomial whose coefficients are the per-source totals.
  SparsePoly source_marginal() const;
  SparsePoly target_marginal() const;

  /// Every move with target scaled by X^shift (used for u^k factors).
  TransportPlan shifted(const ExponentVector& shift) const;

  bool operator==(const TransportPlan&) const = default;

 private:
  std::size_t dim_;
  MoveMap moves_;
};

enum class DominanceReason { MassMismatch, FlowInfeasible };

std::string to_string(DominanceReason reason);

struct DominanceVerdict {
  bool comparable = false;
  std::optional<TransportPlan> plan;
  std::optional<DominanceReason> reason;
};

/**
 * Exact decision of p <= q.
 *
 * Mass equality is checked first. Common mass min(p_g, q_g) stays in place;
 * the remainder is routed by an integral max-flow after clearing
 * denominators: source -> g (capacity p_g), d -> sink (capacity q_d) and an
 * uncapacitated arc g -> d whenever g <= d componentwise.
 *
 * Throws ZeroPolynomialError or DimensionMismatch.
 */
DominanceVerdict decide(const SparsePoly& p, const SparsePoly& q);

/// Chains t1 (p -> q) and t2 (q -> s) into a plan p -> s. Throws std::invalid_argument
/// when t1's target marginal differs from t2's source marginal.
TransportPlan compose_plans(const TransportPlan& first, const TransportPlan& second);

/// True iff all moves are upward with positive mass and the marginals are exactly p and q.
bool validate_plan(const SparsePoly& p, const SparsePoly& q, const TransportPlan& plan);

}  // namespace vgl
