#include "sspsat/dimacs.hpp"

#include <limits>
#include <sstream>

namespace sspsat {

CnfFormula parse_dimacs(std::istream& in, std::vector<std::string>* warnings) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  long long declared_vars = 0;
  long long declared_clauses = 0;
  CnfFormula formula;
  std::vector<int> pending;
  std::size_t pending_line = 0;

  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first)) continue;
    if (first == "c") continue;
    if (first == "%") break;  // SATLIB end marker
    if (first == "p") {
      if (have_header) throw ParseError(lineno, "duplicate problem line");
      std::string fmt;
      std::string extra;
      if (!(tokens >> fmt >> declared_vars >> declared_clauses) || fmt != "cnf" ||
          (tokens >> extra)) {
        throw ParseError(lineno, "malformed header, expected 'p cnf <vars> <clauses>'");
      }
      if (declared_vars < 0 || declared_clauses < 0 ||
          declared_vars > std::numeric_limits<std::uint32_t>::max()) {
        throw ParseError(lineno, "negative or oversized counts in header");
      }
      formula = CnfFormula(static_cast<std::uint32_t>(declared_vars));
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(lineno, "clause data before 'p cnf' header");

    std::istringstream body(line);
    std::string tok;
    while (body >> tok) {
      long long code;
      std::size_t used = 0;
      try {
        code = std::stoll(tok, &used);
      } catch (const std::exception&) {
        throw ParseError(lineno, "invalid literal '" + tok + "'");
      }
      if (used != tok.size()) throw ParseError(lineno, "invalid literal '" + tok + "'");
      if (code == 0) {
        try {
          formula.add_clause(Clause::from_dimacs(pending));
        } catch (const ContractViolation& e) {
          throw ParseError(pending_line ? pending_line : lineno, e.what());
        }
        pending.clear();
        pending_line = 0;
        continue;
      }
      if (code > declared_vars || -code > declared_vars) {
        throw ParseError(lineno, "variable index " + std::to_string(code < 0 ? -code : code) +
                                     " out of range 1.." + std::to_string(declared_vars));
      }
      if (pending.empty()) pending_line = lineno;
      pending.push_back(static_cast<int>(code));
    }
  }
  if (!have_header) throw ParseError(lineno, "missing 'p cnf' header");
  if (!pending.empty()) throw ParseError(pending_line, "clause not terminated by 0");
  if (static_cast<long long>(formula.size()) != declared_clauses && warnings) {
    warnings->push_back("header declares " + std::to_string(declared_clauses) +
                        " clauses but " + std::to_string(formula.size()) + " were read");
  }
  return formula;
}

CnfFormula parse_dimacs_string(const std::string& text, std::vector<std::string>* warnings) {
  std::istringstream in(text);
  return parse_dimacs(in, warnings);
}

void write_dimacs(const CnfFormula& formula, std::ostream& out) {
  out << "p cnf " << formula.num_vars() << ' ' << formula.original_count() << '\n';
  for (std::size_t i = 0; i < formula.original_count(); ++i) {
    const Clause& c = formula.clauses()[i];
    if (!c.empty()) out << c.to_string() << ' ';
    out << "0\n";
  }
  if (!out) throw std::runtime_error("failed to write DIMACS output");
}

std::string to_dimacs_string(const CnfFormula& formula) {
  std::ostringstream out;
  write_dimacs(formula, out);
  return out.str();
}

}  // namespace sspsat
