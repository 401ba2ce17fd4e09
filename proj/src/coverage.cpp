#include "sspsat/coverage.hpp"

#include <vector>

namespace sspsat {

namespace {

// Lowest free variable of `region` fixed by the largest cover. The largest
// cover intersects the region without containing it, so such a variable exists.
Var pick_branch_var(const Cube& region, const std::vector<const Cube*>& live) {
  const Cube* largest = live.front();
  for (const Cube* c : live) {
    if (c->num_free() > largest->num_free()) largest = c;
  }
  for (std::uint32_t i = 1; i <= region.num_vars(); ++i) {
    Var v{i};
    if (!region.is_literal(v) && largest->is_literal(v)) return v;
  }
  throw ContractViolation("coverage branch: no splittable variable");
}

std::vector<const Cube*> intersecting(const Cube& region, const std::vector<const Cube*>& covers) {
  std::vector<const Cube*> out;
  for (const Cube* c : covers) {
    if (cubes_intersect(*c, region)) out.push_back(c);
  }
  return out;
}

class CoverSearch {
 public:
  explicit CoverSearch(std::size_t budget) : budget_(budget) {}

  Coverage run(const Cube& region, const std::vector<const Cube*>& covers) {
    auto live = intersecting(region, covers);
    if (live.empty()) return Coverage::Uncovered;
    for (const Cube* c : live) {
      if (cube_contains(*c, region)) return Coverage::Covered;
    }
    if (budget_ != 0 && splits_ >= budget_) return Coverage::Unknown;
    ++splits_;
    auto [lo, hi] = split(region, pick_branch_var(region, live));
    Coverage a = run(lo, live);
    if (a == Coverage::Uncovered) return a;
    Coverage b = run(hi, live);
    if (b == Coverage::Uncovered) return b;
    return (a == Coverage::Covered && b == Coverage::Covered) ? Coverage::Covered
                                                              : Coverage::Unknown;
  }

 private:
  std::size_t budget_;
  std::size_t splits_ = 0;
};

BigCount count_in(const Cube& region, const std::vector<const Cube*>& covers) {
  auto live = intersecting(region, covers);
  if (live.empty()) return 0;
  for (const Cube* c : live) {
    if (cube_contains(*c, region)) return region.point_count();
  }
  auto [lo, hi] = split(region, pick_branch_var(region, live));
  return count_in(lo, live) + count_in(hi, live);
}

}  // namespace

Coverage is_covered(const Cube& target, std::span<const Cube> covers,
                    const CoverageConfig& config) {
  std::vector<const Cube*> pool;
  pool.reserve(covers.size());
  for (const Cube& c : covers) {
    if (c.num_vars() != target.num_vars()) throw ContractViolation("cube arity mismatch");
    if (config.scope == CoverageScope::SharedLiteral) {
      bool shares = false;
      for (std::size_t i = 0; i < c.num_vars() && !shares; ++i) {
        auto x = c.components()[i];
        shares = x != Component::Both && x == target.components()[i];
      }
      if (!shares) continue;
    }
    pool.push_back(&c);
  }
  return CoverSearch(config.split_budget).run(target, pool);
}

BigCount union_count(std::span<const Cube> covers, std::size_t num_vars) {
  std::vector<const Cube*> pool;
  pool.reserve(covers.size());
  for (const Cube& c : covers) {
    if (c.num_vars() != num_vars) throw ContractViolation("cube arity mismatch");
    pool.push_back(&c);
  }
  return count_in(Cube(num_vars), pool);
}

}  // namespace sspsat
