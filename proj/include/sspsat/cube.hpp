#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sspsat/cnf.hpp"

namespace sspsat {

using BigCount = boost::multiprecision::cpp_int;

/// One factor B_i of a cube: {0}, {1} or {0,1}.
enum class Component : std::uint8_t { Zero, One, Both };

/// A Cartesian product B_1 x ... x B_n of non-empty subsets of {0,1},
/// equivalently the conjunction of its literal components.
class Cube {
 public:
  Cube() = default;
  /// The all-Both cube (every point of the space).
  explicit Cube(std::size_t num_vars) : comps_(num_vars, Component::Both) {}
  explicit Cube(std::vector<Component> comps) : comps_(std::move(comps)) {}
  /// Conjunction of signed DIMACS literals, e.g. {-2, -3}.
  static Cube from_literals(std::size_t num_vars, const std::vector<int>& lits);
  static Cube from_point(const Point& p);

  std::size_t num_vars() const { return comps_.size(); }
  Component operator[](Var v) const { return comps_[v.slot()]; }
  void set(Var v, Component c) { comps_[v.slot()] = c; }
  const std::vector<Component>& components() const { return comps_; }

  bool is_literal(Var v) const { return comps_[v.slot()] != Component::Both; }
  std::size_t num_free() const;
  std::size_t num_literals() const { return num_vars() - num_free(); }
  bool contains_point(const Point& p) const;
  /// 2^(number of Both components).
  BigCount point_count() const;
  /// All points, lowest variable varying slowest. Intended for small cubes.
  std::vector<Point> points() const;

  /// Literal components as signed DIMACS literals in ascending variable order.
  std::vector<int> literals() const;
  /// "-2 4"; the all-Both cube renders as the empty string.
  std::string to_string() const;
  /// "¬x2 x4"; the all-Both cube renders as "⊤".
  std::string to_pretty() const;

  friend bool operator==(const Cube&, const Cube&) = default;

 private:
  std::vector<Component> comps_;
};

struct CubeHash {
  std::size_t operator()(const Cube& c) const;
};

/// The cube of points falsifying the clause.
Cube unsat_cube(const Clause& clause, std::size_t num_vars);

bool cube_falsifies(const Cube& cube, const Clause& clause);
bool cube_satisfies(const Cube& cube, const Clause& clause);
bool cubes_intersect(const Cube& a, const Cube& b);
bool cube_contains(const Cube& outer, const Cube& inner);
std::optional<Cube> cube_intersection(const Cube& a, const Cube& b);

/// Halves with the component of `var` set to {0} and {1}.
std::pair<Cube, Cube> split(const Cube& cube, Var var);

/// Complements the literal component of `var`.
Cube cube_nbhd_dir(const Cube& cube, Var var);

/// One neighborhood cube per clause variable, in clause order.
std::vector<Cube> cube_nbhd(const Cube& cube, const Clause& clause);

struct CubeMerge {
  Cube cube;
  Clause resolvent;
};

/// Component-wise union of two cubes falsifying clauses resolvable on `pivot`,
/// paired with the resolvent. Empty when any precondition fails, including
/// when one of the cubes leaves a resolvent literal unfalsified.
std::optional<CubeMerge> merge(const Cube& p1, const Cube& p2, Var pivot, const Clause& c1,
                               const Clause& c2);

}  // namespace sspsat
