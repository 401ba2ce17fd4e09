#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "sspsat/ssc.hpp"
#include "sspsat/symmetry.hpp"

namespace sspsat {

/// Line-oriented certificate:
///
///   learn <new-id> <lit...> 0 from <id1> <id2> pivot <var>
///   perm <cycles>                     (points stable modulo these symmetries)
///   cluster <cube-literals> 0 clause <id>
///   witness <cube-literals> 0
///   result SAT|UNSAT
struct Certificate {
  bool satisfiable = false;
  std::optional<Cube> witness;
  std::vector<LearnStep> learned;
  std::vector<Permutation> symmetries;
  std::vector<std::pair<Cube, ClauseId>> clusters;
};

Certificate certificate_of(const SscResult& result);
Certificate certificate_of(const SspResult& result);
Certificate certificate_of(const SymSspResult& result, const SymmetryGroup& group);

void emit_proof(const Certificate& cert, std::ostream& out);
/// Throws ParseError on malformed input.
Certificate parse_proof(std::istream& in, std::uint32_t num_vars);

/// Re-derives each learned clause by resolution and appends it to `formula`.
VerifyReport replay_learned(CnfFormula& formula, const std::vector<LearnStep>& steps);

/// Checks a certificate against the input formula: a SAT witness must satisfy
/// every clause; an UNSAT certificate must replay and form a stable set of
/// clusters (or of points modulo the listed symmetries).
VerifyReport verify_certificate(const CnfFormula& formula, const Certificate& cert);

}  // namespace sspsat
