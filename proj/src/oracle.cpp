#include "sspsat/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace sspsat {

OracleResult brute_force_sat(const CnfFormula& formula, std::uint32_t cap) {
  const std::uint32_t n = formula.num_vars();
  if (n > cap) {
    throw ContractViolation("brute force refused: " + std::to_string(n) +
                            " variables exceed the cap of " + std::to_string(cap));
  }
  if (n >= 63) throw ContractViolation("brute force supports at most 62 variables");
  // Bit (n - v) of the mask holds x_v, so counting up walks points in
  // lexicographic order with x1 most significant.
  struct Masks {
    std::uint64_t pos = 0;
    std::uint64_t neg = 0;
  };
  std::vector<Masks> clauses;
  clauses.reserve(formula.size());
  for (const Clause& c : formula.clauses()) {
    Masks m;
    for (const Lit& l : c.literals()) {
      std::uint64_t bit = std::uint64_t{1} << (n - l.var.index);
      (l.positive ? m.pos : m.neg) |= bit;
    }
    clauses.push_back(m);
  }
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t a = 0; a < total; ++a) {
    bool ok = std::all_of(clauses.begin(), clauses.end(), [a](const Masks& m) {
      return (a & m.pos) != 0 || (~a & m.neg) != 0;
    });
    if (!ok) continue;
    Point p(n);
    for (std::uint32_t v = 1; v <= n; ++v) p.set(Var{v}, (a >> (n - v)) & 1U);
    return OracleResult{true, std::move(p)};
  }
  return OracleResult{false, std::nullopt};
}

CnfFormula random_kcnf(std::uint32_t num_vars, std::size_t num_clauses, std::uint32_t width,
                       std::mt19937_64& rng) {
  if (width > num_vars) throw ContractViolation("clause width exceeds variable count");
  CnfFormula f(num_vars);
  std::vector<std::uint32_t> vars(num_vars);
  std::iota(vars.begin(), vars.end(), 1U);
  std::bernoulli_distribution sign(0.5);
  for (std::size_t i = 0; i < num_clauses; ++i) {
    std::vector<std::uint32_t> chosen;
    std::sample(vars.begin(), vars.end(), std::back_inserter(chosen), width, rng);
    std::vector<Lit> lits;
    for (std::uint32_t v : chosen) lits.push_back(Lit{Var{v}, sign(rng)});
    f.add_clause(Clause(std::move(lits)));
  }
  return f;
}

std::vector<CnfFormula> exhaustive_family(std::uint32_t num_vars, std::size_t max_clauses,
                                          std::uint32_t max_width) {
  // Each variable is absent, positive or negative in a clause.
  std::vector<Clause> pool;
  std::uint64_t combos = 1;
  for (std::uint32_t i = 0; i < num_vars; ++i) combos *= 3;
  for (std::uint64_t code = 1; code < combos; ++code) {
    std::vector<Lit> lits;
    std::uint64_t rest = code;
    for (std::uint32_t v = 1; v <= num_vars; ++v, rest /= 3) {
      if (rest % 3 == 1) lits.push_back(Lit{Var{v}, true});
      if (rest % 3 == 2) lits.push_back(Lit{Var{v}, false});
    }
    if (lits.size() <= max_width) pool.emplace_back(std::move(lits));
  }
  std::vector<CnfFormula> out;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> extend = [&](std::size_t from) {
    if (!pick.empty()) {
      CnfFormula f(num_vars);
      for (std::size_t i : pick) f.add_clause(pool[i]);
      out.push_back(std::move(f));
    }
    if (pick.size() == max_clauses) return;
    for (std::size_t i = from; i < pool.size(); ++i) {
      pick.push_back(i);
      extend(i + 1);
      pick.pop_back();
    }
  };
  extend(0);
  return out;
}

}  // namespace sspsat
