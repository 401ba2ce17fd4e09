#pragma once

#include <cstddef>
#include <span>

#include "sspsat/cube.hpp"

namespace sspsat {

enum class CoverageScope {
  Full,
  /// Only covers sharing at least one literal component with the target are
  /// consulted. May report Uncovered for a covered cube, never the reverse.
  SharedLiteral,
};

struct CoverageConfig {
  CoverageScope scope = CoverageScope::Full;
  /// Maximum number of splits per query; 0 means unlimited.
  std::size_t split_budget = 0;
};

enum class Coverage { Covered, Uncovered, Unknown };

/// Decides whether every point of `target` lies in the union of `covers` by
/// recursive splitting of the target.
Coverage is_covered(const Cube& target, std::span<const Cube> covers,
                    const CoverageConfig& config = {});

/// Exact number of points in the union of the cubes.
BigCount union_count(std::span<const Cube> covers, std::size_t num_vars);

}  // namespace sspsat
