#pragma once

/**
 * @file lp.hpp
 * @brief Exact two-phase simplex over rationals (dense tableau, Bland's rule).
 *
 * Solves  maximize c.x  subject to  A x (<=|=|>=) b,  x >= 0.
 * Intended for the tiny support-function programs of the tropical checks,
 * where exactness matters more than speed.
 */

#include <cstddef>
#include <vector>

#include "vgl/rational.hpp"

namespace vgl::lp {

enum class Relation { LessEqual, Equal, GreaterEqual };

struct Constraint {
  std::vector<Rational> coefficients;
  Relation relation = Relation::LessEqual;
  Rational rhs;
};

struct Problem {
  std::size_t variables = 0;
  std::vector<Rational> objective;
  std::vector<Constraint> constraints;
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
  Status status = Status::Infeasible;
  Rational value;
  std::vector<Rational> solution;
};

/// Throws std::invalid_argument if coefficient vectors do not match `variables`.
Result maximize(const Problem& problem);

}  // namespace vgl::lp
