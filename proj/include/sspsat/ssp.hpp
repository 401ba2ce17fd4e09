#pragma once

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "sspsat/cnf.hpp"
#include "sspsat/trace.hpp"

namespace sspsat {

enum class PopPolicy { Fifo, Lifo };

/// Which falsified clause becomes the transport value.
enum class ClausePick { First, Shortest };

using PointSet = std::unordered_set<Point, PointHash>;
using PointTransport = std::unordered_map<Point, ClauseId, PointHash>;

struct SspConfig {
  PopPolicy pop = PopPolicy::Fifo;
  ClausePick clause_pick = ClausePick::First;
};

struct SspResult {
  bool satisfiable = false;
  std::optional<Point> witness;
  /// Body in the order points were moved into it.
  std::vector<Point> points;
  PointTransport transport;
  std::size_t iterations = 0;
};

/// Decides whether a neighborhood point may be skipped given a membership
/// test over Body ∪ Boundary. The plain engine skips only exact members.
using NeighborFilter =
    std::function<bool(const Point& candidate, const std::function<bool(const Point&)>& visited)>;

/// Builds a stable set of points one point at a time, or returns the first
/// satisfying point reached.
SspResult gen_ssp(const CnfFormula& formula, const Point& init, const SspConfig& config = {},
                  TraceLog* trace = nullptr, const NeighborFilter& skip = {});

struct VerifyReport {
  bool ok = true;
  std::string diagnostic;

  explicit operator bool() const { return ok; }
  static VerifyReport fail(std::string why) { return VerifyReport{false, std::move(why)}; }
};

/// Checks that every point falsifies its transport clause and that every
/// neighborhood point stays inside the set.
VerifyReport verify_ssp(const CnfFormula& formula, const std::vector<Point>& points,
                        const PointTransport& transport);

/// Picks from `falsified` (ids in formula order) according to the policy.
ClauseId pick_clause(const CnfFormula& formula, const std::vector<ClauseId>& falsified,
                     ClausePick policy);

}  // namespace sspsat
