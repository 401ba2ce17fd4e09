#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace sspsat {

/// Raised when an operation is called outside its stated precondition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A Boolean variable, 1-based as in DIMACS.
struct Var {
  std::uint32_t index = 0;

  constexpr std::size_t slot() const { return index - 1; }
  friend constexpr auto operator<=>(Var, Var) = default;
};

struct Lit {
  Var var;
  bool positive = true;

  static Lit from_dimacs(int code);
  int to_dimacs() const {
    return positive ? static_cast<int>(var.index) : -static_cast<int>(var.index);
  }
  constexpr Lit operator~() const { return Lit{var, !positive}; }
  friend constexpr auto operator<=>(const Lit&, const Lit&) = default;
};

/// Clause identifiers are 1-based positions in the enclosing formula.
using ClauseId = std::size_t;

/// A disjunction of literals, stored sorted by variable. Equality ignores the
/// id so that a learned clause can be matched against existing ones.
class Clause {
 public:
  Clause() = default;

  /// Collapses duplicate literals; throws ContractViolation on x ∨ ¬x.
  explicit Clause(std::vector<Lit> lits);
  static Clause from_dimacs(std::initializer_list<int> codes);
  static Clause from_dimacs(const std::vector<int>& codes);

  const std::vector<Lit>& literals() const { return lits_; }
  std::size_t size() const { return lits_.size(); }
  bool empty() const { return lits_.empty(); }
  ClauseId id() const { return id_; }
  void set_id(ClauseId id) { id_ = id; }

  std::optional<Lit> literal_of(Var v) const;
  std::uint32_t max_var() const { return lits_.empty() ? 0 : lits_.back().var.index; }

  /// Signed literals, e.g. "1 -3 4".
  std::string to_string() const;

  friend bool operator==(const Clause& a, const Clause& b) { return a.lits_ == b.lits_; }

 private:
  std::vector<Lit> lits_;
  ClauseId id_ = 0;
};

/// A complete assignment to variables 1..n.
class Point {
 public:
  Point() = default;
  explicit Point(std::size_t num_vars) : bits_(num_vars, false) {}
  explicit Point(std::vector<bool> bits) : bits_(std::move(bits)) {}
  /// From a string of '0'/'1' characters, x1 first.
  static Point from_bits(const std::string& bits);

  std::size_t num_vars() const { return bits_.size(); }
  bool operator[](Var v) const { return bits_[v.slot()]; }
  void set(Var v, bool value) { bits_[v.slot()] = value; }
  void flip(Var v) { bits_[v.slot()] = !bits_[v.slot()]; }
  const std::vector<bool>& bits() const { return bits_; }

  std::string to_string() const;

  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<bool> bits_;
};

struct PointHash {
  std::size_t operator()(const Point& p) const { return std::hash<std::vector<bool>>{}(p.bits()); }
};

class CnfFormula {
 public:
  CnfFormula() = default;
  explicit CnfFormula(std::uint32_t num_vars) : num_vars_(num_vars) {}
  CnfFormula(std::uint32_t num_vars, std::vector<Clause> clauses);
  static CnfFormula from_dimacs(std::uint32_t num_vars,
                                std::initializer_list<std::initializer_list<int>> clauses);

  std::uint32_t num_vars() const { return num_vars_; }
  std::size_t size() const { return clauses_.size(); }
  std::size_t original_count() const { return original_count_; }
  const std::vector<Clause>& clauses() const { return clauses_; }
  const Clause& clause(ClauseId id) const;
  bool has_clause(ClauseId id) const { return id >= 1 && id <= clauses_.size(); }

  /// Appends an input clause; only valid before any clause has been learned.
  ClauseId add_clause(Clause clause);
  /// Appends a learned clause with a fresh id.
  ClauseId add_learned(Clause clause);
  /// Id of a clause with the same literal set, if present.
  std::optional<ClauseId> find(const Clause& clause) const;

 private:
  ClauseId append(Clause clause);

  std::uint32_t num_vars_ = 0;
  std::size_t original_count_ = 0;
  std::vector<Clause> clauses_;
  std::unordered_map<std::string, ClauseId> index_;
};

enum class ClauseValue { Satisfied, Falsified };

ClauseValue evaluate_clause(const Clause& clause, const Point& point);

/// Ids of the clauses falsified by the point, in formula order.
std::vector<ClauseId> falsified_clauses(const CnfFormula& formula, const Point& point);

/// The unique variable on which the clauses clash, if exactly one exists.
std::optional<Var> resolvable_on(const Clause& c1, const Clause& c2);

Clause resolve(const Clause& c1, const Clause& c2, Var pivot);

/// Points at Hamming distance one from a falsifying point that satisfy the
/// clause, one per literal, in literal order.
std::vector<Point> point_nbhd(const Point& point, const Clause& clause);

}  // namespace sspsat
