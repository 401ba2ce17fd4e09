#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sspsat/coverage.hpp"
#include "sspsat/cube.hpp"
#include "sspsat/ssp.hpp"
#include "sspsat/trace.hpp"

namespace sspsat {

using CubeTransport = std::unordered_map<Cube, ClauseId, CubeHash>;

enum class InitStrategy {
  SingleCube,  // one seed cube, the whole space unless given
  NeStyle,     // Unsat(C) for every clause, in formula order
};

enum class SplitHeuristic {
  FirstIntersecting,  // lowest free variable of any clause meeting the cube
  MostConstrained,    // lowest free variable of the meeting clause with fewest free variables
};

struct SscConfig {
  InitStrategy init = InitStrategy::SingleCube;
  std::optional<Cube> seed;
  PopPolicy pop = PopPolicy::Fifo;
  SplitHeuristic split = SplitHeuristic::FirstIntersecting;
  ClausePick clause_pick = ClausePick::First;
  bool merge_enabled = true;
  CoverageConfig coverage;
  bool record_xi = true;
  /// Safety stop for experiments; 0 means run to completion.
  std::size_t max_iterations = 0;
};

/// One resolution step performed by a successful merge.
struct LearnStep {
  ClauseId id = 0;
  Clause clause;
  ClauseId left = 0;
  ClauseId right = 0;
  Var pivot;
};

/// ξ = |Union(Body)| + |F| after an iteration.
struct XiSample {
  std::size_t iteration = 0;
  BigCount body_points;
  std::size_t formula_size = 0;

  BigCount xi() const { return body_points + formula_size; }
};

struct SscStats {
  std::size_t splits = 0;
  std::size_t merges = 0;
  std::size_t expansions = 0;
  std::size_t covered_discards = 0;
};

struct SscResult {
  bool satisfiable = false;
  std::optional<Cube> witness;
  /// Body clusters in insertion order.
  std::vector<Cube> body;
  CubeTransport transport;
  std::vector<LearnStep> learned;
  /// Input formula extended with the learned clauses.
  CnfFormula formula;
  std::vector<XiSample> xi_log;
  std::size_t iterations = 0;
  SscStats stats;
};

struct MergeOutcome {
  /// The popped cube first, then its partner.
  std::vector<Cube> merged;
  Cube cube;
  Clause resolvent;
  ClauseId left = 0;
  ClauseId right = 0;
  Var pivot;
  /// Set when the resolvent is already a clause of the formula.
  std::optional<ClauseId> existing;
};

/// Builds a stable set of clusters (cubes), learning resolvents as cubes are
/// merged, or returns a cube all of whose points satisfy the formula.
SscResult gen_ssc(const CnfFormula& formula, const SscConfig& config = {},
                  TraceLog* trace = nullptr);

/// Searches `boundary` in order for a partner of `p`: a cube falsifying a
/// clause resolvable with one falsified by `p` such that the component-wise
/// union falsifies the resolvent. Pairwise only.
std::optional<MergeOutcome> merge_cubes(std::span<const Cube> boundary, const Cube& p,
                                        const CnfFormula& formula);

/// Variable to split on when the cube meets some Unsat(C) but falsifies no clause.
Var pick_split_var(const Cube& cube, const CnfFormula& formula,
                   SplitHeuristic heuristic = SplitHeuristic::FirstIntersecting);

/// Every cluster falsifies its transport clause and each of its neighborhood
/// cubes is covered by the union of the clusters.
VerifyReport verify_ssc(const CnfFormula& formula, const std::vector<Cube>& clusters,
                        const CubeTransport& transport);

/// Point-level reading of a stable set of clusters: every point takes the
/// transport clause of the first cluster containing it.
std::pair<std::vector<Point>, PointTransport> expand_ssc_to_ssp(const std::vector<Cube>& clusters,
                                                                const CubeTransport& transport);

}  // namespace sspsat
