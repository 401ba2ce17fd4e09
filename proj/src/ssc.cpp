#include "sspsat/ssc.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace sspsat {

namespace {

using CubeSet = std::unordered_set<Cube, CubeHash>;

std::vector<ClauseId> clauses_falsified_by(const CnfFormula& formula, const Cube& cube) {
  std::vector<ClauseId> out;
  for (const Clause& c : formula.clauses()) {
    if (cube_falsifies(cube, c)) out.push_back(c.id());
  }
  return out;
}

// Clauses with Unsat(C) ∩ cube ≠ ∅.
std::vector<ClauseId> clauses_meeting(const CnfFormula& formula, const Cube& cube) {
  std::vector<ClauseId> out;
  for (const Clause& c : formula.clauses()) {
    if (!cube_satisfies(cube, c)) out.push_back(c.id());
  }
  return out;
}

std::string_view coverage_tag(Coverage c) {
  switch (c) {
    case Coverage::Covered:
      return "covered";
    case Coverage::Uncovered:
      return "added";
    case Coverage::Unknown:
      return "added-unknown";
  }
  return "?";
}

class SscRun {
 public:
  SscRun(const CnfFormula& formula, const SscConfig& config, TraceLog* trace)
      : config_(config), trace_(trace) {
    result_.formula = formula;
  }

  SscResult run() {
    const CnfFormula& f = result_.formula;
    if (f.num_vars() == 0) throw ContractViolation("formula has no variables");
    if (f.size() == 0) throw ContractViolation("formula has no clauses");
    initialize();
    while (!boundary_.empty()) {
      ++result_.iterations;
      if (config_.max_iterations != 0 && result_.iterations > config_.max_iterations) {
        throw std::runtime_error("gen_ssc exceeded the iteration limit");
      }
      Cube p = std::move(boundary_.front());
      boundary_.pop_front();
      boundary_set_.erase(p);
      if (step(std::move(p))) return finish_sat();
      record_xi();
    }
    if (trace_) {
      trace_->add(TraceKind::Finish,
                  {std::string("UNSAT"), std::string("body"), std::to_string(result_.body.size()),
                   std::string("learned"), std::to_string(result_.learned.size())});
    }
    return std::move(result_);
  }

 private:
  void initialize() {
    const CnfFormula& f = result_.formula;
    std::vector<Cube> initial;
    if (config_.init == InitStrategy::SingleCube) {
      Cube seed = config_.seed.value_or(Cube(f.num_vars()));
      if (seed.num_vars() != f.num_vars()) throw ContractViolation("seed cube arity mismatch");
      initial.push_back(std::move(seed));
    } else {
      for (const Clause& c : f.clauses()) initial.push_back(unsat_cube(c, f.num_vars()));
    }
    for (Cube& c : initial) {
      if (!boundary_.empty() && is_covered(c, total(), config_.coverage) == Coverage::Covered) {
        continue;
      }
      if (trace_) trace_->add(TraceKind::Initialize, {c});
      boundary_set_.insert(c);
      boundary_.push_back(std::move(c));
    }
    if (config_.record_xi) {
      result_.xi_log.push_back(XiSample{0, body_points_, f.size()});
    }
  }

  std::vector<Cube> total() const {
    std::vector<Cube> t(result_.body);
    t.insert(t.end(), boundary_.begin(), boundary_.end());
    return t;
  }

  void push_front(std::vector<Cube> cubes) {
    for (auto it = cubes.rbegin(); it != cubes.rend(); ++it) {
      if (boundary_set_.insert(*it).second) boundary_.push_front(std::move(*it));
    }
  }

  void push_expansion(std::vector<Cube> cubes) {
    if (config_.pop == PopPolicy::Lifo) {
      push_front(std::move(cubes));
      return;
    }
    for (Cube& c : cubes) {
      if (boundary_set_.insert(c).second) boundary_.push_back(std::move(c));
    }
  }

  // Returns true when `p` is a satisfying cube.
  bool step(Cube p) {
    CnfFormula& f = result_.formula;
    if (body_set_.count(p)) {
      if (trace_) trace_->add(TraceKind::MoveToBody, {p, std::string("already-in-body")});
      return false;
    }
    auto falsified = clauses_falsified_by(f, p);
    if (falsified.empty()) {
      if (clauses_meeting(f, p).empty()) {
        witness_ = std::move(p);
        return true;
      }
      split_step(p);
      return false;
    }
    if (config_.merge_enabled) {
      std::vector<Cube> snapshot(boundary_.begin(), boundary_.end());
      if (auto m = merge_cubes(snapshot, p, f)) {
        merge_step(*m);
        return false;
      }
    }
    expand_step(p, pick_clause(f, falsified, config_.clause_pick));
    return false;
  }

  void split_step(const Cube& p) {
    ++result_.stats.splits;
    Var x = pick_split_var(p, result_.formula, config_.split);
    auto [lo, hi] = split(p, x);
    auto t = total();
    Coverage lo_cov = is_covered(lo, t, config_.coverage);
    Coverage hi_cov = is_covered(hi, t, config_.coverage);
    if (trace_) {
      trace_->add(TraceKind::Split, {p, std::string("on"), x, std::string("->"), lo,
                                     std::string(coverage_tag(lo_cov)), hi,
                                     std::string(coverage_tag(hi_cov))});
    }
    std::vector<Cube> kept;
    if (lo_cov != Coverage::Covered) kept.push_back(std::move(lo));
    if (hi_cov != Coverage::Covered) kept.push_back(std::move(hi));
    result_.stats.covered_discards += 2 - kept.size();
    push_front(std::move(kept));
  }

  void merge_step(const MergeOutcome& m) {
    CnfFormula& f = result_.formula;
    ++result_.stats.merges;
    for (std::size_t i = 1; i < m.merged.size(); ++i) {
      auto it = std::find(boundary_.begin(), boundary_.end(), m.merged[i]);
      if (it != boundary_.end()) boundary_.erase(it);
      boundary_set_.erase(m.merged[i]);
    }
    ClauseId id;
    if (m.existing) {
      id = *m.existing;
    } else {
      id = f.add_learned(m.resolvent);
      result_.learned.push_back(LearnStep{id, m.resolvent, m.left, m.right, m.pivot});
    }
    if (trace_) {
      trace_->add(TraceKind::Merge,
                  {m.merged[0], m.merged[1], std::string("pivot"), m.pivot, std::string("->"),
                   m.cube, std::string(m.existing ? "known" : "learn"), ClauseRef{id, f.clause(id)},
                   std::string("from"), ClauseRef{m.left, f.clause(m.left)},
                   ClauseRef{m.right, f.clause(m.right)}});
    }
    push_front({m.cube});
  }

  void expand_step(const Cube& p, ClauseId id) {
    ++result_.stats.expansions;
    const Clause& c = result_.formula.clause(id);
    auto t = total();
    std::vector<TraceItem> items{p, std::string("clause"), ClauseRef{id, c}, std::string("->")};
    std::vector<Cube> fresh;
    for (Cube& q : cube_nbhd(p, c)) {
      Coverage cov = is_covered(q, t, config_.coverage);
      if (trace_) {
        items.emplace_back(q);
        items.emplace_back(std::string(coverage_tag(cov)));
      }
      if (cov == Coverage::Covered) {
        ++result_.stats.covered_discards;
        continue;
      }
      fresh.push_back(std::move(q));
    }
    push_expansion(std::move(fresh));
    if (config_.record_xi) {
      // |Union(Body ∪ {p})| = |Union(Body)| + |p| - |p ∩ Union(Body)|
      std::vector<Cube> inside;
      for (const Cube& b : result_.body) {
        if (auto i = cube_intersection(b, p)) inside.push_back(std::move(*i));
      }
      BigCount overlap = inside.empty() ? BigCount(0) : union_count(inside, p.num_vars());
      body_points_ += p.point_count() - overlap;
    }
    result_.transport[p] = id;
    result_.body.push_back(p);
    body_set_.insert(p);
    if (trace_) {
      trace_->add(TraceKind::Nbhd, std::move(items));
      trace_->add(TraceKind::MoveToBody, {p, std::string("clause"), ClauseRef{id, c}});
    }
  }

  void record_xi() {
    if (!config_.record_xi) return;
    result_.xi_log.push_back(XiSample{result_.iterations, body_points_, result_.formula.size()});
  }

  SscResult finish_sat() {
    if (trace_) {
      trace_->add(TraceKind::Satisfied, {*witness_});
      trace_->add(TraceKind::Finish, {std::string("SAT")});
    }
    record_xi();
    result_.satisfiable = true;
    result_.witness = std::move(witness_);
    return std::move(result_);
  }

  const SscConfig& config_;
  TraceLog* trace_;
  SscResult result_;
  std::deque<Cube> boundary_;
  CubeSet boundary_set_;
  CubeSet body_set_;
  BigCount body_points_ = 0;
  std::optional<Cube> witness_;
};

}  // namespace

SscResult gen_ssc(const CnfFormula& formula, const SscConfig& config, TraceLog* trace) {
  return SscRun(formula, config, trace).run();
}

std::optional<MergeOutcome> merge_cubes(std::span<const Cube> boundary, const Cube& p,
                                        const CnfFormula& formula) {
  auto own = clauses_falsified_by(formula, p);
  if (own.empty()) return std::nullopt;
  for (const Cube& q : boundary) {
    if (q == p || q.num_vars() != p.num_vars()) continue;
    auto theirs = clauses_falsified_by(formula, q);
    for (ClauseId ci : own) {
      const Clause& c1 = formula.clause(ci);
      for (ClauseId di : theirs) {
        const Clause& c2 = formula.clause(di);
        auto pivot = resolvable_on(c1, c2);
        if (!pivot) continue;
        auto m = merge(p, q, *pivot, c1, c2);
        if (!m) continue;
        return MergeOutcome{{p, q}, std::move(m->cube), m->resolvent, ci, di, *pivot,
                            formula.find(m->resolvent)};
      }
    }
  }
  return std::nullopt;
}

Var pick_split_var(const Cube& cube, const CnfFormula& formula, SplitHeuristic heuristic) {
  std::optional<Var> best;
  std::size_t best_free = 0;
  for (ClauseId id : clauses_meeting(formula, cube)) {
    const Clause& c = formula.clause(id);
    std::optional<Var> lowest;
    std::size_t free = 0;
    for (const Lit& l : c.literals()) {
      if (cube.is_literal(l.var)) continue;
      ++free;
      if (!lowest) lowest = l.var;
    }
    if (!lowest) continue;  // falsified by the cube
    if (heuristic == SplitHeuristic::FirstIntersecting) {
      if (!best || *lowest < *best) best = lowest;
    } else if (!best || free < best_free) {
      best = lowest;
      best_free = free;
    }
  }
  if (!best) {
    throw ContractViolation("cube " + cube.to_string() +
                            " has no free variable in a clause it meets");
  }
  return *best;
}

VerifyReport verify_ssc(const CnfFormula& formula, const std::vector<Cube>& clusters,
                        const CubeTransport& transport) {
  if (clusters.empty()) return VerifyReport::fail("cluster set is empty");
  const CoverageConfig exact{CoverageScope::Full, 0};
  for (const Cube& p : clusters) {
    if (p.num_vars() != formula.num_vars()) {
      return VerifyReport::fail("cluster [" + p.to_string() + "] has wrong arity");
    }
    auto it = transport.find(p);
    if (it == transport.end()) {
      return VerifyReport::fail("cluster [" + p.to_string() + "] has no transport clause");
    }
    if (!formula.has_clause(it->second)) {
      return VerifyReport::fail("cluster [" + p.to_string() + "] maps to unknown clause " +
                                std::to_string(it->second));
    }
    const Clause& c = formula.clause(it->second);
    if (!cube_falsifies(p, c)) {
      return VerifyReport::fail("cluster [" + p.to_string() + "] does not falsify C" +
                                std::to_string(it->second));
    }
    for (const Cube& q : cube_nbhd(p, c)) {
      if (is_covered(q, clusters, exact) != Coverage::Covered) {
        return VerifyReport::fail("neighbor [" + q.to_string() + "] of [" + p.to_string() +
                                  "] w.r.t. C" + std::to_string(it->second) +
                                  " is not covered by the clusters");
      }
    }
  }
  return {};
}

std::pair<std::vector<Point>, PointTransport> expand_ssc_to_ssp(const std::vector<Cube>& clusters,
                                                                const CubeTransport& transport) {
  std::vector<Point> points;
  PointTransport point_transport;
  for (const Cube& c : clusters) {
    auto it = transport.find(c);
    if (it == transport.end()) throw ContractViolation("cluster without transport clause");
    for (Point& p : c.points()) {
      if (point_transport.emplace(p, it->second).second) points.push_back(std::move(p));
    }
  }
  return {std::move(points), std::move(point_transport)};
}

}  // namespace sspsat
