#include "vgl/lp.hpp"

#include <limits>
#include <stdexcept>

namespace vgl::lp {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct Tableau {
  std::vector<std::vector<Rational>> rows;  // coefficients, last entry is rhs
  std::vector<std::size_t> basis;
  std::size_t columns = 0;

  const Rational& rhs(std::size_t i) const { return rows[i][columns]; }

  void pivot(std::size_t row, std::size_t col) {
    Rational p = rows[row][col];
    for (auto& v : rows[row]) v /= p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == row || rows[i][col] == 0) continue;
      Rational f = rows[i][col];
      for (std::size_t j = 0; j <= columns; ++j)
        if (rows[row][j] != 0) rows[i][j] -= f * rows[row][j];
    }
    basis[row] = col;
  }

  // Maximizes cost.x over the current basic feasible solution, entering only
  // columns flagged in `allowed`. Bland's rule guarantees termination.
  Status optimize(const std::vector<Rational>& cost, const std::vector<bool>& allowed) {
    while (true) {
      std::size_t entering = kNone;
      for (std::size_t j = 0; j < columns && entering == kNone; ++j) {
        if (!allowed[j]) continue;
        Rational reduced = -cost[j];
        for (std::size_t i = 0; i < rows.size(); ++i)
          if (rows[i][j] != 0) reduced += cost[basis[i]] * rows[i][j];
        if (reduced < 0) entering = j;
      }
      if (entering == kNone) return Status::Optimal;

      std::size_t leaving = kNone;
      Rational best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][entering] <= 0) continue;
        Rational ratio = rhs(i) / rows[i][entering];
        if (leaving == kNone || ratio < best || (ratio == best && basis[i] < basis[leaving])) {
          leaving = i;
          best = ratio;
        }
      }
      if (leaving == kNone) return Status::Unbounded;
      pivot(leaving, entering);
    }
  }

  Rational value(const std::vector<Rational>& cost) const {
    Rational v = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) v += cost[basis[i]] * rhs(i);
    return v;
  }
};

}  // namespace

Result maximize(const Problem& problem) {
  const std::size_t n = problem.variables;
  if (problem.objective.size() != n) throw std::invalid_argument("lp: objective size mismatch");
  for (const auto& c : problem.constraints)
    if (c.coefficients.size() != n) throw std::invalid_argument("lp: constraint size mismatch");

  // Column layout: structural | slack/surplus | artificial.
  std::size_t slack_count = 0, artificial_count = 0;
  for (const auto& c : problem.constraints) {
    bool flip = c.rhs < 0;
    Relation rel = c.relation;
    if (flip && rel != Relation::Equal) rel = rel == Relation::LessEqual ? Relation::GreaterEqual : Relation::LessEqual;
    if (rel != Relation::Equal) ++slack_count;
    if (rel != Relation::LessEqual) ++artificial_count;
  }
  const std::size_t first_slack = n;
  const std::size_t first_artificial = n + slack_count;

  Tableau t;
  t.columns = first_artificial + artificial_count;
  std::size_t next_slack = first_slack, next_artificial = first_artificial;
  for (const auto& c : problem.constraints) {
    std::vector<Rational> row(t.columns + 1, Rational(0));
    bool flip = c.rhs < 0;
    Relation rel = c.relation;
    if (flip && rel != Relation::Equal) rel = rel == Relation::LessEqual ? Relation::GreaterEqual : Relation::LessEqual;
    for (std::size_t j = 0; j < n; ++j) row[j] = flip ? Rational(-c.coefficients[j]) : c.coefficients[j];
    row[t.columns] = flip ? Rational(-c.rhs) : c.rhs;
    std::size_t basic = kNone;
    if (rel == Relation::LessEqual) {
      row[next_slack] = 1;
      basic = next_slack++;
    } else {
      if (rel == Relation::GreaterEqual) row[next_slack++] = -1;
      row[next_artificial] = 1;
      basic = next_artificial++;
    }
    t.rows.push_back(std::move(row));
    t.basis.push_back(basic);
  }

  // Phase 1: drive artificial variables to zero.
  std::vector<bool> allowed(t.columns, true);
  if (artificial_count > 0) {
    std::vector<Rational> phase1(t.columns, Rational(0));
    for (std::size_t j = first_artificial; j < t.columns; ++j) phase1[j] = -1;
    t.optimize(phase1, allowed);
    if (t.value(phase1) < 0) return Result{Status::Infeasible, 0, {}};

    for (std::size_t i = 0; i < t.rows.size();) {
      if (t.basis[i] < first_artificial) {
        ++i;
        continue;
      }
      std::size_t col = kNone;
      for (std::size_t j = 0; j < first_artificial && col == kNone; ++j)
        if (t.rows[i][j] != 0) col = j;
      if (col != kNone) {
        t.pivot(i, col);
        ++i;
      } else {
        // redundant equality
        t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
        t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
    for (std::size_t j = first_artificial; j < t.columns; ++j) allowed[j] = false;
  }

  std::vector<Rational> cost(t.columns, Rational(0));
  for (std::size_t j = 0; j < n; ++j) cost[j] = problem.objective[j];
  if (t.optimize(cost, allowed) == Status::Unbounded) return Result{Status::Unbounded, 0, {}};

  Result result;
  result.status = Status::Optimal;
  result.value = t.value(cost);
  result.solution.assign(n, Rational(0));
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    if (t.basis[i] < n) result.solution[t.basis[i]] = t.rhs(i);
  return result;
}

}  // namespace vgl::lp
