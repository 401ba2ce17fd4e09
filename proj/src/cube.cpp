#include "sspsat/cube.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace sspsat {

namespace {

Component falsifying_value(const Lit& l) { return l.positive ? Component::Zero : Component::One; }
Component satisfying_value(const Lit& l) { return l.positive ? Component::One : Component::Zero; }

Component complement(Component c) {
  switch (c) {
    case Component::Zero:
      return Component::One;
    case Component::One:
      return Component::Zero;
    case Component::Both:
      break;
  }
  throw ContractViolation("cannot complement a free component");
}

void check_var(const Cube& cube, Var v) {
  if (v.index == 0 || v.index > cube.num_vars()) {
    throw ContractViolation("variable x" + std::to_string(v.index) + " outside cube arity " +
                            std::to_string(cube.num_vars()));
  }
}

void check_clause(const Cube& cube, const Clause& clause) {
  if (clause.max_var() > cube.num_vars()) {
    throw ContractViolation("clause (" + clause.to_string() + ") exceeds cube arity " +
                            std::to_string(cube.num_vars()));
  }
}

}  // namespace

Cube Cube::from_literals(std::size_t num_vars, const std::vector<int>& lits) {
  Cube c(num_vars);
  for (int code : lits) {
    Lit l = Lit::from_dimacs(code);
    check_var(c, l.var);
    Component want = l.positive ? Component::One : Component::Zero;
    if (c[l.var] != Component::Both && c[l.var] != want) {
      throw ContractViolation("contradictory literals for x" + std::to_string(l.var.index));
    }
    c.set(l.var, want);
  }
  return c;
}

Cube Cube::from_point(const Point& p) {
  std::vector<Component> comps;
  comps.reserve(p.num_vars());
  for (bool b : p.bits()) comps.push_back(b ? Component::One : Component::Zero);
  return Cube(std::move(comps));
}

std::size_t Cube::num_free() const {
  return static_cast<std::size_t>(std::count(comps_.begin(), comps_.end(), Component::Both));
}

bool Cube::contains_point(const Point& p) const {
  if (p.num_vars() != num_vars()) throw ContractViolation("point/cube arity mismatch");
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (comps_[i] == Component::Zero && p.bits()[i]) return false;
    if (comps_[i] == Component::One && !p.bits()[i]) return false;
  }
  return true;
}

BigCount Cube::point_count() const {
  BigCount one = 1;
  return one << num_free();
}

std::vector<Point> Cube::points() const {
  std::vector<Point> out;
  Point base(num_vars());
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (comps_[i] == Component::Both)
      free.push_back(i);
    else
      base.set(Var{static_cast<std::uint32_t>(i + 1)}, comps_[i] == Component::One);
  }
  if (free.size() >= 63) throw ContractViolation("cube too large to enumerate");
  const std::uint64_t total = std::uint64_t{1} << free.size();
  out.reserve(total);
  for (std::uint64_t m = 0; m < total; ++m) {
    Point p = base;
    for (std::size_t k = 0; k < free.size(); ++k) {
      bool bit = (m >> (free.size() - 1 - k)) & 1U;
      p.set(Var{static_cast<std::uint32_t>(free[k] + 1)}, bit);
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<int> Cube::literals() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    int v = static_cast<int>(i + 1);
    if (comps_[i] == Component::Zero) out.push_back(-v);
    if (comps_[i] == Component::One) out.push_back(v);
  }
  return out;
}

std::string Cube::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int l : literals()) {
    if (!first) out << ' ';
    out << l;
    first = false;
  }
  return out.str();
}

std::string Cube::to_pretty() const {
  auto lits = literals();
  if (lits.empty()) return "⊤";
  std::ostringstream out;
  for (std::size_t i = 0; i < lits.size(); ++i) {
    if (i) out << ' ';
    if (lits[i] < 0) out << "¬";
    out << 'x' << std::abs(lits[i]);
  }
  return out.str();
}

std::size_t CubeHash::operator()(const Cube& c) const {
  std::size_t h = 1469598103934665603ULL;
  for (Component x : c.components()) {
    h ^= static_cast<std::size_t>(x) + 1;
    h *= 1099511628211ULL;
  }
  return h;
}

Cube unsat_cube(const Clause& clause, std::size_t num_vars) {
  Cube c(num_vars);
  check_clause(c, clause);
  for (const Lit& l : clause.literals()) c.set(l.var, falsifying_value(l));
  return c;
}

bool cube_falsifies(const Cube& cube, const Clause& clause) {
  check_clause(cube, clause);
  for (const Lit& l : clause.literals()) {
    if (cube[l.var] != falsifying_value(l)) return false;
  }
  return true;
}

bool cube_satisfies(const Cube& cube, const Clause& clause) {
  check_clause(cube, clause);
  for (const Lit& l : clause.literals()) {
    if (cube[l.var] == satisfying_value(l)) return true;
  }
  return false;
}

bool cubes_intersect(const Cube& a, const Cube& b) {
  if (a.num_vars() != b.num_vars()) throw ContractViolation("cube arity mismatch");
  const auto& x = a.components();
  const auto& y = b.components();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != Component::Both && y[i] != Component::Both && x[i] != y[i]) return false;
  }
  return true;
}

bool cube_contains(const Cube& outer, const Cube& inner) {
  if (outer.num_vars() != inner.num_vars()) throw ContractViolation("cube arity mismatch");
  const auto& o = outer.components();
  const auto& in = inner.components();
  for (std::size_t i = 0; i < o.size(); ++i) {
    if (o[i] != Component::Both && o[i] != in[i]) return false;
  }
  return true;
}

std::optional<Cube> cube_intersection(const Cube& a, const Cube& b) {
  if (!cubes_intersect(a, b)) return std::nullopt;
  std::vector<Component> comps(a.components());
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (comps[i] == Component::Both) comps[i] = b.components()[i];
  }
  return Cube(std::move(comps));
}

std::pair<Cube, Cube> split(const Cube& cube, Var var) {
  check_var(cube, var);
  if (cube.is_literal(var)) {
    throw ContractViolation("cannot split on x" + std::to_string(var.index) +
                            ": component is already a literal");
  }
  Cube lo = cube;
  Cube hi = cube;
  lo.set(var, Component::Zero);
  hi.set(var, Component::One);
  return {std::move(lo), std::move(hi)};
}

Cube cube_nbhd_dir(const Cube& cube, Var var) {
  check_var(cube, var);
  if (!cube.is_literal(var)) {
    throw ContractViolation("neighborhood direction x" + std::to_string(var.index) +
                            " is a free component");
  }
  Cube out = cube;
  out.set(var, complement(cube[var]));
  return out;
}

std::vector<Cube> cube_nbhd(const Cube& cube, const Clause& clause) {
  if (!cube_falsifies(cube, clause)) {
    throw ContractViolation("cube " + cube.to_string() + " does not falsify (" +
                            clause.to_string() + ")");
  }
  std::vector<Cube> out;
  out.reserve(clause.size());
  for (const Lit& l : clause.literals()) out.push_back(cube_nbhd_dir(cube, l.var));
  return out;
}

std::optional<CubeMerge> merge(const Cube& p1, const Cube& p2, Var pivot, const Clause& c1,
                               const Clause& c2) {
  if (p1.num_vars() != p2.num_vars()) return std::nullopt;
  if (c1.max_var() > p1.num_vars() || c2.max_var() > p1.num_vars()) return std::nullopt;
  if (pivot.index == 0 || pivot.index > p1.num_vars()) return std::nullopt;
  if (!cube_falsifies(p1, c1) || !cube_falsifies(p2, c2)) return std::nullopt;
  auto clash = resolvable_on(c1, c2);
  if (!clash || *clash != pivot) return std::nullopt;
  if (!p1.is_literal(pivot) || !p2.is_literal(pivot) || p1[pivot] == p2[pivot]) {
    return std::nullopt;
  }
  Clause resolvent = resolve(c1, c2, pivot);
  for (const Lit& l : resolvent.literals()) {
    if (p1[l.var] != falsifying_value(l) || p2[l.var] != falsifying_value(l)) {
      return std::nullopt;
    }
  }
  std::vector<Component> comps(p1.num_vars());
  for (std::size_t i = 0; i < comps.size(); ++i) {
    Component a = p1.components()[i];
    Component b = p2.components()[i];
    comps[i] = (a == b) ? a : Component::Both;
  }
  return CubeMerge{Cube(std::move(comps)), std::move(resolvent)};
}

}  // namespace sspsat
