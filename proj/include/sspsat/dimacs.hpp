#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sspsat/cnf.hpp"

namespace sspsat {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Reads DIMACS CNF. A clause-count mismatch is reported through `warnings`
/// and the clauses actually present are kept.
CnfFormula parse_dimacs(std::istream& in, std::vector<std::string>* warnings = nullptr);
CnfFormula parse_dimacs_string(const std::string& text,
                               std::vector<std::string>* warnings = nullptr);

/// Writes the original clauses (learned ones excluded).
void write_dimacs(const CnfFormula& formula, std::ostream& out);
std::string to_dimacs_string(const CnfFormula& formula);

}  // namespace sspsat
