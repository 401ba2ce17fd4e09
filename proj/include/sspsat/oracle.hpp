#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "sspsat/cnf.hpp"

namespace sspsat {

inline constexpr std::uint32_t kOracleVarCap = 24;

struct OracleResult {
  bool satisfiable = false;
  /// First satisfying point in lexicographic order (x1 most significant).
  std::optional<Point> witness;
};

/// Exhaustive truth-table scan over bitmasks, independent of the engines.
/// Throws ContractViolation above `cap` variables.
OracleResult brute_force_sat(const CnfFormula& formula, std::uint32_t cap = kOracleVarCap);

/// Uniform random k-CNF: distinct variables per clause, random polarities.
CnfFormula random_kcnf(std::uint32_t num_vars, std::size_t num_clauses, std::uint32_t width,
                       std::mt19937_64& rng);

/// Every formula with 1..max_clauses distinct non-empty clauses over
/// `num_vars` variables, each clause of width at most `max_width`.
std::vector<CnfFormula> exhaustive_family(std::uint32_t num_vars, std::size_t max_clauses,
                                          std::uint32_t max_width);

}  // namespace sspsat
