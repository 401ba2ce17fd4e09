#include "sspsat/cnf.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace sspsat {

Lit Lit::from_dimacs(int code) {
  if (code == 0) throw ContractViolation("literal code 0 is the clause terminator");
  return Lit{Var{static_cast<std::uint32_t>(std::abs(code))}, code > 0};
}

Clause::Clause(std::vector<Lit> lits) : lits_(std::move(lits)) {
  std::sort(lits_.begin(), lits_.end());
  lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
  for (std::size_t i = 0; i < lits_.size(); ++i) {
    if (lits_[i].var.index == 0) throw ContractViolation("variable index 0 in clause");
    if (i > 0 && lits_[i - 1].var == lits_[i].var) {
      throw ContractViolation("tautological clause: x" + std::to_string(lits_[i].var.index) +
                              " occurs in both polarities");
    }
  }
}

Clause Clause::from_dimacs(std::initializer_list<int> codes) {
  return from_dimacs(std::vector<int>(codes));
}

Clause Clause::from_dimacs(const std::vector<int>& codes) {
  std::vector<Lit> lits;
  lits.reserve(codes.size());
  for (int c : codes) lits.push_back(Lit::from_dimacs(c));
  return Clause(std::move(lits));
}

std::optional<Lit> Clause::literal_of(Var v) const {
  auto it = std::lower_bound(lits_.begin(), lits_.end(), Lit{v, false});
  if (it != lits_.end() && it->var == v) return *it;
  return std::nullopt;
}

std::string Clause::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < lits_.size(); ++i) {
    if (i) out << ' ';
    out << lits_[i].to_dimacs();
  }
  return out.str();
}

Point Point::from_bits(const std::string& bits) {
  std::vector<bool> v;
  v.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1') throw ContractViolation("point string must contain only 0/1");
    v.push_back(c == '1');
  }
  return Point(std::move(v));
}

std::string Point::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (bool b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

CnfFormula::CnfFormula(std::uint32_t num_vars, std::vector<Clause> clauses) : num_vars_(num_vars) {
  for (auto& c : clauses) add_clause(std::move(c));
}

CnfFormula CnfFormula::from_dimacs(std::uint32_t num_vars,
                                   std::initializer_list<std::initializer_list<int>> clauses) {
  CnfFormula f(num_vars);
  for (auto codes : clauses) f.add_clause(Clause::from_dimacs(codes));
  return f;
}

const Clause& CnfFormula::clause(ClauseId id) const {
  if (!has_clause(id)) throw ContractViolation("no clause with id " + std::to_string(id));
  return clauses_[id - 1];
}

ClauseId CnfFormula::add_clause(Clause clause) {
  if (original_count_ != clauses_.size()) {
    throw ContractViolation("input clauses cannot follow learned clauses");
  }
  ClauseId id = append(std::move(clause));
  original_count_ = clauses_.size();
  return id;
}

ClauseId CnfFormula::add_learned(Clause clause) { return append(std::move(clause)); }

ClauseId CnfFormula::append(Clause clause) {
  if (clause.max_var() > num_vars_) {
    throw ContractViolation("clause variable x" + std::to_string(clause.max_var()) +
                            " exceeds formula arity " + std::to_string(num_vars_));
  }
  ClauseId id = clauses_.size() + 1;
  clause.set_id(id);
  index_.emplace(clause.to_string(), id);  // keeps the first id for duplicates
  clauses_.push_back(std::move(clause));
  return id;
}

std::optional<ClauseId> CnfFormula::find(const Clause& clause) const {
  auto it = index_.find(clause.to_string());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ClauseValue evaluate_clause(const Clause& clause, const Point& point) {
  if (clause.max_var() > point.num_vars()) {
    throw ContractViolation("point arity " + std::to_string(point.num_vars()) +
                            " is smaller than clause variable x" +
                            std::to_string(clause.max_var()));
  }
  for (const Lit& l : clause.literals()) {
    if (point[l.var] == l.positive) return ClauseValue::Satisfied;
  }
  return ClauseValue::Falsified;
}

std::vector<ClauseId> falsified_clauses(const CnfFormula& formula, const Point& point) {
  if (point.num_vars() != formula.num_vars()) {
    throw ContractViolation("point arity does not match formula arity");
  }
  std::vector<ClauseId> out;
  for (const Clause& c : formula.clauses()) {
    if (evaluate_clause(c, point) == ClauseValue::Falsified) out.push_back(c.id());
  }
  return out;
}

std::optional<Var> resolvable_on(const Clause& c1, const Clause& c2) {
  std::optional<Var> clash;
  auto a = c1.literals().begin();
  auto b = c2.literals().begin();
  while (a != c1.literals().end() && b != c2.literals().end()) {
    if (a->var < b->var) {
      ++a;
    } else if (b->var < a->var) {
      ++b;
    } else {
      if (a->positive != b->positive) {
        if (clash) return std::nullopt;
        clash = a->var;
      }
      ++a;
      ++b;
    }
  }
  return clash;
}

Clause resolve(const Clause& c1, const Clause& c2, Var pivot) {
  auto clash = resolvable_on(c1, c2);
  if (!clash || *clash != pivot) {
    throw ContractViolation("clauses (" + c1.to_string() + ") and (" + c2.to_string() +
                            ") are not resolvable on x" + std::to_string(pivot.index));
  }
  std::vector<Lit> lits;
  lits.reserve(c1.size() + c2.size());
  for (const Lit& l : c1.literals())
    if (l.var != pivot) lits.push_back(l);
  for (const Lit& l : c2.literals())
    if (l.var != pivot) lits.push_back(l);
  return Clause(std::move(lits));
}

std::vector<Point> point_nbhd(const Point& point, const Clause& clause) {
  if (evaluate_clause(clause, point) != ClauseValue::Falsified) {
    throw ContractViolation("point " + point.to_string() + " satisfies (" + clause.to_string() +
                            "); its neighborhood is undefined");
  }
  std::vector<Point> out;
  out.reserve(clause.size());
  for (const Lit& l : clause.literals()) {
    Point q = point;
    q.flip(l.var);
    out.push_back(std::move(q));
  }
  return out;
}

}  // namespace sspsat
