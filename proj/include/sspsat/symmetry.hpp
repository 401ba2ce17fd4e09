#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sspsat/cnf.hpp"
#include "sspsat/ssp.hpp"

namespace sspsat {

/// A bijection on variables 1..n. Points are pushed forward:
/// apply(π, p)[π(i)] = p[i].
class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(std::uint32_t num_vars);
  /// `images[i - 1]` is the image of variable i; throws unless bijective.
  explicit Permutation(std::vector<std::uint32_t> images);
  /// Parses cycle notation such as "(1 4)(2 5)(3 6)".
  static Permutation from_cycles(std::uint32_t num_vars, const std::string& text);
  static Permutation transposition(std::uint32_t num_vars, std::uint32_t a, std::uint32_t b);

  std::uint32_t num_vars() const { return static_cast<std::uint32_t>(images_.size()); }
  Var operator()(Var v) const { return Var{images_[v.slot()]}; }
  const std::vector<std::uint32_t>& images() const { return images_; }
  bool is_identity() const;

  /// (this ∘ other)(v) = this(other(v)).
  Permutation compose(const Permutation& other) const;
  std::string to_cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

struct SymmetryGroup {
  std::uint32_t num_vars = 0;
  std::vector<Permutation> generators;
};

Point apply_perm_point(const Permutation& perm, const Point& point);
Clause apply_perm_clause(const Permutation& perm, const Clause& clause);

/// π(F) is the same clause multiset as F.
bool is_symmetric(const CnfFormula& formula, const Permutation& perm);

enum class Tri { Yes, No, Unknown };

inline constexpr std::size_t kDefaultOrbitLimit = 1'000'000;

/// Orbit of the point under the group, BFS order starting at the point;
/// empty if it has more than `limit` elements.
std::optional<std::vector<Point>> orbit(const Point& point, const SymmetryGroup& group,
                                        std::size_t limit = kDefaultOrbitLimit);

Tri in_same_orbit(const Point& p1, const Point& p2, const SymmetryGroup& group,
                  std::size_t limit = kDefaultOrbitLimit);

/// Order of the group generated by the generators, by closure from the identity.
std::optional<std::size_t> group_order(const SymmetryGroup& group,
                                       std::size_t limit = kDefaultOrbitLimit);

struct SymSspResult {
  bool satisfiable = false;
  std::optional<Point> witness;
  std::vector<Point> points;
  PointTransport transport;
  std::size_t iterations = 0;
};

/// Point-by-point construction that skips a neighbor when Body ∪ Boundary
/// already holds a point of its orbit. Throws ContractViolation if some
/// generator is not a symmetry of the formula.
SymSspResult gen_ssp_mod_symmetry(const CnfFormula& formula, const SymmetryGroup& group,
                                  const Point& init, const SspConfig& config = {},
                                  std::size_t limit = kDefaultOrbitLimit,
                                  TraceLog* trace = nullptr);

/// Every neighbor of every point is in the set or symmetric to a member.
/// Orbits that exceed the limit fail the check.
VerifyReport verify_stable_mod_symmetry(const CnfFormula& formula,
                                        const std::vector<Point>& points,
                                        const PointTransport& transport,
                                        const SymmetryGroup& group,
                                        std::size_t limit = kDefaultOrbitLimit);

struct SymExpansion {
  /// True when the expanded set would exceed the point limit.
  bool overflow = false;
  std::vector<Point> points;
  PointTransport transport;
};

/// Union of the orbits of the points, each image π(p) carrying π(g(p)).
/// `limit` bounds the total number of expanded points.
SymExpansion expand_mod_sym_to_ssp(const CnfFormula& formula, const std::vector<Point>& points,
                                   const PointTransport& transport, const SymmetryGroup& group,
                                   std::size_t limit = kDefaultOrbitLimit);

/// Pigeon-hole instance: variable of pigeon i in hole j is (i-1)*holes + j.
struct PhInstance {
  std::uint32_t pigeons = 0;
  std::uint32_t holes = 0;

  std::uint32_t num_vars() const { return pigeons * holes; }
  Var var(std::uint32_t pigeon, std::uint32_t hole) const {
    return Var{(pigeon - 1) * holes + hole};
  }
};

struct PhFormula {
  CnfFormula formula;
  PhInstance instance;
};

/// One "pigeon is placed" clause per pigeon followed by the pairwise
/// "no sharing" clauses hole by hole.
PhFormula ph_formula(std::uint32_t pigeons, std::uint32_t holes);

/// Adjacent pigeon swaps followed by adjacent hole swaps.
SymmetryGroup ph_symmetry_generators(const PhInstance& inst);

/// One permutation per line in cycle notation; blank lines and lines starting
/// with 'c' or '#' are ignored.
SymmetryGroup parse_symmetry_file(const std::string& text, std::uint32_t num_vars);
std::string format_symmetry_file(const SymmetryGroup& group);

}  // namespace sspsat
