#include "vgl/dominance.hpp"

#include <deque>
#include <stdexcept>
#include <vector>

#include "vgl/maxflow.hpp"

namespace vgl {

bool MoveLess::operator()(const std::pair<ExponentVector, ExponentVector>& a,
                          const std::pair<ExponentVector, ExponentVector>& b) const {
  GradedLexLess less;
  if (less(a.first, b.first)) return true;
  if (less(b.first, a.first)) return false;
  return less(a.second, b.second);
}

void TransportPlan::add_move(const ExponentVector& from, const ExponentVector& to, const Rational& mass) {
  if (from.dim() != dim_ || to.dim() != dim_) throw DimensionMismatch("move dimension does not match plan");
  if (mass == 0) return;
  auto [it, inserted] = moves_.try_emplace(Move{from, to}, mass);
  if (!inserted) it->second += mass;
  if (it->second == 0) moves_.erase(it);
}

SparsePoly TransportPlan::source_marginal() const {
  SparsePoly p(dim_);
  for (const auto& [move, mass] : moves_) p.add_term(move.first, mass);
  return p;
}

SparsePoly TransportPlan::target_marginal() const {
  SparsePoly q(dim_);
  for (const auto& [move, mass] : moves_) q.add_term(move.second, mass);
  return q;
}

TransportPlan TransportPlan::shifted(const ExponentVector& shift) const {
  TransportPlan out(dim_);
  for (const auto& [move, mass] : moves_) out.add_move(move.first + shift, move.second + shift, mass);
  return out;
}

std::string to_string(DominanceReason reason) {
  switch (reason) {
    case DominanceReason::MassMismatch:
      return "mass-mismatch";
    case DominanceReason::FlowInfeasible:
      return "flow-infeasible";
  }
  return "unknown";
}

namespace {

Integer common_denominator(const SparsePoly& p, const SparsePoly& q) {
  Integer l = 1;
  for (const auto* poly : {&p, &q})
    for (const auto& [e, c] : poly->terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

void require_nonzero_same_dim(const SparsePoly& p, const SparsePoly& q, const char* what) {
  if (p.dim() != q.dim()) throw DimensionMismatch(std::string(what) + ": dimensions differ");
  if (p.is_zero() || q.is_zero()) throw ZeroPolynomialError(std::string(what) + ": zero polynomial");
}

}  // namespace

DominanceVerdict decide(const SparsePoly& p, const SparsePoly& q) {
  require_nonzero_same_dim(p, q, "decide");
  DominanceVerdict verdict;
  if (mass(p) != mass(q)) {
    verdict.reason = DominanceReason::MassMismatch;
    return verdict;
  }

  TransportPlan plan(p.dim());
  SparsePoly supply(p.dim()), demand(p.dim());
  for (const auto& [e, c] : p.terms()) {
    Rational stay = q.coeff(e);
    if (stay > c) stay = c;
    plan.add_move(e, e, stay);
    supply.add_term(e, c - stay);
  }
  for (const auto& [e, c] : q.terms()) {
    auto it = plan.moves().find({e, e});
    demand.add_term(e, it == plan.moves().end() ? c : Rational(c - it->second));
  }

  if (!supply.is_zero()) {
    const Integer scale = common_denominator(supply, demand);
    const std::vector<ExponentVector> sources = newton_support(supply);
    const std::vector<ExponentVector> targets = newton_support(demand);
    const std::size_t source_node = 0;
    const std::size_t sink_node = 1 + sources.size() + targets.size();
    MaxFlow network(sink_node + 1);

    Integer total = 0;
    for (std::size_t i = 0; i < sources.size(); ++i) {
      Rational cap = supply.coeff(sources[i]) * scale;
      total += cap.get_num();
      network.add_edge(source_node, 1 + i, cap.get_num());
    }
    for (std::size_t j = 0; j < targets.size(); ++j) {
      Rational cap = demand.coeff(targets[j]) * scale;
      network.add_edge(1 + sources.size() + j, sink_node, cap.get_num());
    }
    struct Cross {
      std::size_t source, target, edge;
    };
    std::vector<Cross> cross;
    for (std::size_t i = 0; i < sources.size(); ++i)
      for (std::size_t j = 0; j < targets.size(); ++j)
        if (sources[i].dominated_by(targets[j]))
          cross.push_back({i, j, network.add_edge(1 + i, 1 + sources.size() + j, total)});

    if (network.solve(source_node, sink_node) != total) {
      verdict.reason = DominanceReason::FlowInfeasible;
      return verdict;
    }
    for (const auto& arc : cross) {
      Integer f = network.flow(arc.edge);
      if (f > 0) plan.add_move(sources[arc.source], targets[arc.target], make_rational(f, scale));
    }
  }

  verdict.comparable = true;
  verdict.plan = std::move(plan);
  return verdict;
}

TransportPlan compose_plans(const TransportPlan& first, const TransportPlan& second) {
  if (first.dim() != second.dim()) throw DimensionMismatch("compose_plans: dimensions differ");
  if (!(first.target_marginal() == second.source_marginal()))
    throw std::invalid_argument("compose_plans: intermediate marginals differ");

  // Per intermediate point, pair incoming with outgoing mass in graded-lex order.
  std::map<ExponentVector, std::deque<std::pair<ExponentVector, Rational>>, GradedLexLess> incoming, outgoing;
  for (const auto& [move, mass] : first.moves()) incoming[move.second].emplace_back(move.first, mass);
  for (const auto& [move, mass] : second.moves()) outgoing[move.first].emplace_back(move.second, mass);

  TransportPlan composed(first.dim());
  for (auto& [middle, in] : incoming) {
    auto& out = outgoing.at(middle);
    while (!in.empty() && !out.empty()) {
      auto& [from, in_mass] = in.front();
      auto& [to, out_mass] = out.front();
      Rational amount = in_mass < out_mass ? in_mass : out_mass;
      composed.add_move(from, to, amount);
      in_mass -= amount;
      out_mass -= amount;
      if (in_mass == 0) in.pop_front();
      if (out_mass == 0) out.pop_front();
    }
  }
  return composed;
}

bool validate_plan(const SparsePoly& p, const SparsePoly& q, const TransportPlan& plan) {
  if (p.dim() != q.dim() || plan.dim() != p.dim()) return false;
  for (const auto& [move, mass] : plan.moves()) {
    if (mass <= 0) return false;
    if (!move.first.dominated_by(move.second)) return false;
  }
  return plan.source_marginal() == p && plan.target_marginal() == q;
}

}  // namespace vgl
