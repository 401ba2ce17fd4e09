#include "sspsat/ssp.hpp"

#include <deque>

#include "sspsat/cube.hpp"

namespace sspsat {

ClauseId pick_clause(const CnfFormula& formula, const std::vector<ClauseId>& falsified,
                     ClausePick policy) {
  if (falsified.empty()) throw ContractViolation("no falsified clause to pick");
  if (policy == ClausePick::First) return falsified.front();
  ClauseId best = falsified.front();
  for (ClauseId id : falsified) {
    if (formula.clause(id).size() < formula.clause(best).size()) best = id;
  }
  return best;
}

SspResult gen_ssp(const CnfFormula& formula, const Point& init, const SspConfig& config,
                  TraceLog* trace, const NeighborFilter& skip) {
  if (init.num_vars() != formula.num_vars()) {
    throw ContractViolation("initial point arity does not match formula");
  }
  SspResult result;
  std::deque<Point> boundary{init};
  PointSet boundary_set{init};
  PointSet body_set;
  auto visited = [&](const Point& p) { return body_set.count(p) || boundary_set.count(p); };
  if (trace) trace->add(TraceKind::Initialize, {Cube::from_point(init)});

  while (!boundary.empty()) {
    ++result.iterations;
    Point p;
    if (config.pop == PopPolicy::Fifo) {
      p = std::move(boundary.front());
      boundary.pop_front();
    } else {
      p = std::move(boundary.back());
      boundary.pop_back();
    }
    boundary_set.erase(p);
    body_set.insert(p);
    result.points.push_back(p);

    auto falsified = falsified_clauses(formula, p);
    if (falsified.empty()) {
      if (trace) {
        trace->add(TraceKind::Satisfied, {Cube::from_point(p)});
        trace->add(TraceKind::Finish, {std::string("SAT")});
      }
      result.satisfiable = true;
      result.witness = p;
      return result;
    }
    ClauseId id = pick_clause(formula, falsified, config.clause_pick);
    const Clause& c = formula.clause(id);
    result.transport[p] = id;

    std::vector<TraceItem> items{Cube::from_point(p), std::string("clause"), ClauseRef{id, c},
                                 std::string("->")};
    for (Point& q : point_nbhd(p, c)) {
      bool known = visited(q) || (skip && skip(q, visited));
      if (trace) {
        items.emplace_back(Cube::from_point(q));
        items.emplace_back(std::string(known ? "covered" : "added"));
      }
      if (known) continue;
      boundary_set.insert(q);
      boundary.push_back(std::move(q));
    }
    if (trace) {
      trace->add(TraceKind::Nbhd, std::move(items));
      trace->add(TraceKind::MoveToBody, {Cube::from_point(p), std::string("clause"), ClauseRef{id, c}});
    }
  }
  if (trace) {
    trace->add(TraceKind::Finish, {std::string("UNSAT"), std::string("body"),
                                   std::to_string(result.points.size())});
  }
  return result;
}

VerifyReport verify_ssp(const CnfFormula& formula, const std::vector<Point>& points,
                        const PointTransport& transport) {
  if (points.empty()) return VerifyReport::fail("point set is empty");
  PointSet members(points.begin(), points.end());
  for (const Point& p : points) {
    if (p.num_vars() != formula.num_vars()) {
      return VerifyReport::fail("point " + p.to_string() + " has wrong arity");
    }
    auto it = transport.find(p);
    if (it == transport.end()) {
      return VerifyReport::fail("point " + p.to_string() + " has no transport clause");
    }
    if (!formula.has_clause(it->second)) {
      return VerifyReport::fail("point " + p.to_string() + " maps to unknown clause " +
                                std::to_string(it->second));
    }
    const Clause& c = formula.clause(it->second);
    if (evaluate_clause(c, p) != ClauseValue::Falsified) {
      return VerifyReport::fail("point " + p.to_string() + " satisfies its transport clause C" +
                                std::to_string(it->second));
    }
    for (const Point& q : point_nbhd(p, c)) {
      if (!members.count(q)) {
        return VerifyReport::fail("neighbor " + q.to_string() + " of " + p.to_string() +
                                  " w.r.t. C" + std::to_string(it->second) +
                                  " is outside the set");
      }
    }
  }
  return {};
}

}  // namespace sspsat
