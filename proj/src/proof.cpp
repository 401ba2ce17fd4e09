#include "sspsat/proof.hpp"

#include <sstream>
#include <string>

#include "sspsat/dimacs.hpp"

namespace sspsat {

Certificate certificate_of(const SscResult& result) {
  Certificate cert;
  cert.satisfiable = result.satisfiable;
  cert.witness = result.witness;
  if (result.satisfiable) return cert;
  cert.learned = result.learned;
  for (const Cube& c : result.body) cert.clusters.emplace_back(c, result.transport.at(c));
  return cert;
}

Certificate certificate_of(const SspResult& result) {
  Certificate cert;
  cert.satisfiable = result.satisfiable;
  if (result.witness) cert.witness = Cube::from_point(*result.witness);
  if (result.satisfiable) return cert;
  for (const Point& p : result.points) {
    cert.clusters.emplace_back(Cube::from_point(p), result.transport.at(p));
  }
  return cert;
}

Certificate certificate_of(const SymSspResult& result, const SymmetryGroup& group) {
  Certificate cert;
  cert.satisfiable = result.satisfiable;
  if (result.witness) cert.witness = Cube::from_point(*result.witness);
  if (result.satisfiable) return cert;
  cert.symmetries = group.generators;
  for (const Point& p : result.points) {
    cert.clusters.emplace_back(Cube::from_point(p), result.transport.at(p));
  }
  return cert;
}

namespace {

std::string cube_field(const Cube& c) {
  std::string s = c.to_string();
  return s.empty() ? "0" : s + " 0";
}

}  // namespace

void emit_proof(const Certificate& cert, std::ostream& out) {
  if (cert.satisfiable) {
    if (!cert.witness) throw ContractViolation("SAT certificate without witness");
    out << "witness " << cube_field(*cert.witness) << '\n';
    out << "result SAT\n";
  } else {
    for (const LearnStep& s : cert.learned) {
      out << "learn " << s.id << ' ';
      if (!s.clause.empty()) out << s.clause.to_string() << ' ';
      out << "0 from " << s.left << ' ' << s.right << " pivot " << s.pivot.index << '\n';
    }
    for (const Permutation& p : cert.symmetries) {
      std::string cycles = p.to_cycles();
      out << "perm " << (cycles.empty() ? "()" : cycles) << '\n';
    }
    for (const auto& [cube, id] : cert.clusters) {
      out << "cluster " << cube_field(cube) << " clause " << id << '\n';
    }
    out << "result UNSAT\n";
  }
  if (!out) throw std::runtime_error("failed to write proof");
}

namespace {

// Reads signed literals up to the terminating 0.
std::vector<int> read_literals(std::istringstream& in, std::size_t lineno) {
  std::vector<int> lits;
  long long v;
  while (in >> v) {
    if (v == 0) return lits;
    lits.push_back(static_cast<int>(v));
  }
  throw ParseError(lineno, "literal list not terminated by 0");
}

void expect(std::istringstream& in, const char* word, std::size_t lineno) {
  std::string tok;
  if (!(in >> tok) || tok != word) {
    throw ParseError(lineno, std::string("expected '") + word + "'");
  }
}

std::size_t read_number(std::istringstream& in, std::size_t lineno) {
  long long v;
  if (!(in >> v) || v < 0) throw ParseError(lineno, "expected a non-negative number");
  return static_cast<std::size_t>(v);
}

}  // namespace

Certificate parse_proof(std::istream& in, std::uint32_t num_vars) {
  Certificate cert;
  std::string line;
  std::size_t lineno = 0;
  bool have_result = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream tokens(line);
    std::string kind;
    if (!(tokens >> kind) || kind == "c") continue;
    if (have_result) throw ParseError(lineno, "content after result line");
    try {
      if (kind == "learn") {
        LearnStep s;
        s.id = read_number(tokens, lineno);
        s.clause = Clause::from_dimacs(read_literals(tokens, lineno));
        expect(tokens, "from", lineno);
        s.left = read_number(tokens, lineno);
        s.right = read_number(tokens, lineno);
        expect(tokens, "pivot", lineno);
        s.pivot = Var{static_cast<std::uint32_t>(read_number(tokens, lineno))};
        cert.learned.push_back(std::move(s));
      } else if (kind == "perm") {
        std::string rest;
        std::getline(tokens, rest);
        cert.symmetries.push_back(Permutation::from_cycles(num_vars, rest));
      } else if (kind == "cluster") {
        Cube c = Cube::from_literals(num_vars, read_literals(tokens, lineno));
        expect(tokens, "clause", lineno);
        cert.clusters.emplace_back(std::move(c), read_number(tokens, lineno));
      } else if (kind == "witness") {
        cert.witness = Cube::from_literals(num_vars, read_literals(tokens, lineno));
      } else if (kind == "result") {
        std::string verdict;
        tokens >> verdict;
        if (verdict != "SAT" && verdict != "UNSAT") throw ParseError(lineno, "bad result");
        cert.satisfiable = verdict == "SAT";
        have_result = true;
      } else {
        throw ParseError(lineno, "unknown record '" + kind + "'");
      }
    } catch (const ContractViolation& e) {
      throw ParseError(lineno, e.what());
    }
  }
  if (!have_result) throw ParseError(lineno, "missing result line");
  return cert;
}

VerifyReport replay_learned(CnfFormula& formula, const std::vector<LearnStep>& steps) {
  for (const LearnStep& s : steps) {
    const std::string tag = "learn " + std::to_string(s.id) + ": ";
    if (s.id != formula.size() + 1) {
      return VerifyReport::fail(tag + "expected id " + std::to_string(formula.size() + 1));
    }
    if (!formula.has_clause(s.left) || !formula.has_clause(s.right)) {
      return VerifyReport::fail(tag + "antecedent not yet defined");
    }
    const Clause& a = formula.clause(s.left);
    const Clause& b = formula.clause(s.right);
    auto pivot = resolvable_on(a, b);
    if (!pivot || *pivot != s.pivot) {
      return VerifyReport::fail(tag + "antecedents do not clash exactly on x" +
                                std::to_string(s.pivot.index));
    }
    if (!(resolve(a, b, s.pivot) == s.clause)) {
      return VerifyReport::fail(tag + "clause is not the resolvent");
    }
    formula.add_learned(s.clause);
  }
  return {};
}

VerifyReport verify_certificate(const CnfFormula& formula, const Certificate& cert) {
  if (cert.satisfiable) {
    if (!cert.witness) return VerifyReport::fail("SAT certificate without witness");
    for (const Clause& c : formula.clauses()) {
      if (!cube_satisfies(*cert.witness, c)) {
        return VerifyReport::fail("witness does not satisfy C" + std::to_string(c.id()));
      }
    }
    return {};
  }
  CnfFormula extended = formula;
  if (auto r = replay_learned(extended, cert.learned); !r) return r;

  std::vector<Cube> clusters;
  CubeTransport transport;
  for (const auto& [cube, id] : cert.clusters) {
    if (!transport.emplace(cube, id).second) {
      return VerifyReport::fail("duplicate cluster [" + cube.to_string() + "]");
    }
    clusters.push_back(cube);
  }
  if (cert.symmetries.empty()) return verify_ssc(extended, clusters, transport);

  SymmetryGroup group{extended.num_vars(), cert.symmetries};
  for (const Permutation& g : group.generators) {
    if (!is_symmetric(extended, g)) {
      return VerifyReport::fail("formula is not symmetric under " + g.to_cycles());
    }
  }
  std::vector<Point> points;
  PointTransport point_transport;
  for (const auto& [cube, id] : cert.clusters) {
    if (cube.num_free() != 0) {
      return VerifyReport::fail("symmetry certificate lists a non-point cluster");
    }
    Point p(cube.num_vars());
    for (std::uint32_t v = 1; v <= cube.num_vars(); ++v) {
      p.set(Var{v}, cube[Var{v}] == Component::One);
    }
    point_transport.emplace(p, id);
    points.push_back(std::move(p));
  }
  return verify_stable_mod_symmetry(extended, points, point_transport, group);
}

}  // namespace sspsat
