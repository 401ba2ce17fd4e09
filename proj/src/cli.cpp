#include "sspsat/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "sspsat/dimacs.hpp"
#include "sspsat/oracle.hpp"
#include "sspsat/proof.hpp"
#include "sspsat/ssc.hpp"
#include "sspsat/ssp.hpp"
#include "sspsat/symmetry.hpp"
#include "sspsat/trace.hpp"

namespace sspsat {

namespace {

struct SolveOptions {
  std::string mode = "ssc";
  std::string init;
  std::string pop = "fifo";
  bool no_merge = false;
  std::string coverage = "full";
  std::string split = "first";
  std::string pick = "first";
  std::string trace_path;
  bool pretty = false;
  std::string proof_path;
  std::string sym_path;
  std::size_t orbit_limit = kDefaultOrbitLimit;
  std::string file;
};

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

CnfFormula load_formula(const std::string& path, std::ostream& out) {
  std::vector<std::string> warnings;
  CnfFormula f = parse_dimacs_string(read_text(path), &warnings);
  for (const auto& w : warnings) out << "c warning: " << w << '\n';
  return f;
}

std::vector<int> parse_literal_list(const std::string& text) {
  std::istringstream in(text);
  std::vector<int> lits;
  long long v;
  while (in >> v) {
    if (v != 0) lits.push_back(static_cast<int>(v));
  }
  if (!in.eof()) throw std::runtime_error("--init expects signed literals, got '" + text + "'");
  return lits;
}

// Unlisted variables default to false.
Point point_from_literals(std::uint32_t num_vars, const std::string& text) {
  Cube c = Cube::from_literals(num_vars, parse_literal_list(text));
  Point p(num_vars);
  for (std::uint32_t v = 1; v <= num_vars; ++v) p.set(Var{v}, c[Var{v}] == Component::One);
  return p;
}

void print_model(std::ostream& out, const Cube& witness) {
  out << "v";
  for (std::uint32_t v = 1; v <= witness.num_vars(); ++v) {
    int lit = static_cast<int>(v);
    out << ' ' << (witness[Var{v}] == Component::One ? lit : -lit);
  }
  out << " 0\n";
}

int solve(const SolveOptions& opt, std::ostream& out) {
  CnfFormula formula = load_formula(opt.file, out);
  TraceLog trace;
  TraceLog* trace_ptr = opt.trace_path.empty() ? nullptr : &trace;
  PopPolicy pop = opt.pop == "lifo" ? PopPolicy::Lifo : PopPolicy::Fifo;
  ClausePick pick = opt.pick == "shortest" ? ClausePick::Shortest : ClausePick::First;

  Certificate cert;
  std::ostringstream stats;
  if (opt.mode == "ssp" || opt.mode == "sym") {
    Point init = point_from_literals(formula.num_vars(), opt.init);
    SspConfig config{pop, pick};
    if (opt.mode == "ssp") {
      SspResult r = gen_ssp(formula, init, config, trace_ptr);
      stats << "c points " << r.points.size() << "\nc iterations " << r.iterations << '\n';
      cert = certificate_of(r);
    } else {
      if (opt.sym_path.empty()) throw std::runtime_error("--mode sym requires --sym FILE");
      SymmetryGroup group = parse_symmetry_file(read_text(opt.sym_path), formula.num_vars());
      SymSspResult r = gen_ssp_mod_symmetry(formula, group, init, config, opt.orbit_limit, trace_ptr);
      stats << "c points " << r.points.size() << "\nc iterations " << r.iterations
            << "\nc generators " << group.generators.size() << '\n';
      cert = certificate_of(r, group);
    }
  } else {
    SscConfig config;
    config.init = opt.mode == "ssc-ne" ? InitStrategy::NeStyle : InitStrategy::SingleCube;
    if (!opt.init.empty()) {
      if (opt.mode == "ssc-ne") throw std::runtime_error("--init is not used by --mode ssc-ne");
      config.seed = Cube::from_literals(formula.num_vars(), parse_literal_list(opt.init));
    }
    config.pop = pop;
    config.clause_pick = pick;
    config.split = opt.split == "constrained" ? SplitHeuristic::MostConstrained
                                              : SplitHeuristic::FirstIntersecting;
    config.merge_enabled = !opt.no_merge;
    config.coverage.scope =
        opt.coverage == "shared" ? CoverageScope::SharedLiteral : CoverageScope::Full;
    config.record_xi = false;
    SscResult r = gen_ssc(formula, config, trace_ptr);
    stats << "c clusters " << r.body.size() << "\nc learned " << r.learned.size()
          << "\nc iterations " << r.iterations << "\nc splits " << r.stats.splits
          << "\nc merges " << r.stats.merges << '\n';
    cert = certificate_of(r);
  }

  if (trace_ptr) {
    std::ostringstream t;
    emit_trace(trace, t, opt.pretty ? TraceStyle::Pretty : TraceStyle::Dimacs);
    write_text(opt.trace_path, t.str());
  }
  if (!opt.proof_path.empty()) {
    std::ostringstream p;
    emit_proof(cert, p);
    write_text(opt.proof_path, p.str());
  }
  out << stats.str();
  if (cert.satisfiable) {
    out << "s SATISFIABLE\n";
    print_model(out, *cert.witness);
    return kExitSat;
  }
  out << "s UNSATISFIABLE\n";
  return kExitUnsat;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stable-set-of-clusters SAT solver"};
  app.require_subcommand(1);

  SolveOptions solve_opt;
  auto* solve_cmd = app.add_subcommand("solve", "Decide a DIMACS CNF formula");
  solve_cmd->add_option("--mode", solve_opt.mode, "Engine")
      ->check(CLI::IsMember({"ssp", "ssc", "ssc-ne", "sym"}));
  solve_cmd->add_option("--init", solve_opt.init,
                        "Initial point (ssp/sym) or seed cube (ssc) as signed literals");
  solve_cmd->add_option("--pop", solve_opt.pop, "Boundary order")
      ->check(CLI::IsMember({"fifo", "lifo"}));
  solve_cmd->add_flag("--no-merge", solve_opt.no_merge, "Disable cube merging");
  solve_cmd->add_option("--coverage", solve_opt.coverage, "Coverage check scope")
      ->check(CLI::IsMember({"full", "shared"}));
  solve_cmd->add_option("--split", solve_opt.split, "Split variable heuristic")
      ->check(CLI::IsMember({"first", "constrained"}));
  solve_cmd->add_option("--pick", solve_opt.pick, "Transport clause choice")
      ->check(CLI::IsMember({"first", "shortest"}));
  solve_cmd->add_option("--trace", solve_opt.trace_path, "Write the execution trace");
  solve_cmd->add_flag("--pretty", solve_opt.pretty, "Render trace cubes as ¬x literals");
  solve_cmd->add_option("--proof", solve_opt.proof_path, "Write the certificate");
  solve_cmd->add_option("--sym", solve_opt.sym_path, "Symmetry generators (cycle notation)");
  solve_cmd->add_option("--orbit-limit", solve_opt.orbit_limit, "Orbit BFS bound")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("file", solve_opt.file, "DIMACS CNF file, '-' for stdin")->required();

  std::uint32_t pigeons = 0;
  std::uint32_t holes = 0;
  std::string ph_out;
  std::string ph_sym_out;
  auto* gen_cmd = app.add_subcommand("gen-ph", "Write the pigeon-hole formula PH(N,M)");
  gen_cmd->add_option("N", pigeons, "Pigeons")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("M", holes, "Holes")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("-o,--output", ph_out, "Output file (default stdout)");
  gen_cmd->add_option("--sym-out", ph_sym_out, "Also write the symmetry generators");

  std::string verify_proof_path;
  std::string verify_file;
  auto* verify_cmd = app.add_subcommand("verify", "Check a certificate against a formula");
  verify_cmd->add_option("--proof", verify_proof_path, "Certificate file")->required();
  verify_cmd->add_option("file", verify_file, "DIMACS CNF file")->required();

  std::string oracle_file;
  auto* oracle_cmd = app.add_subcommand("oracle", "Decide by exhaustive truth table");
  oracle_cmd->add_option("file", oracle_file, "DIMACS CNF file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*solve_cmd) return solve(solve_opt, out);
    if (*gen_cmd) {
      PhFormula ph = ph_formula(pigeons, holes);
      std::string text = "c pigeon-hole PH(" + std::to_string(pigeons) + "," +
                         std::to_string(holes) + ")\n" + to_dimacs_string(ph.formula);
      if (ph_out.empty())
        out << text;
      else
        write_text(ph_out, text);
      if (!ph_sym_out.empty()) {
        write_text(ph_sym_out, format_symmetry_file(ph_symmetry_generators(ph.instance)));
      }
      return kExitOk;
    }
    if (*verify_cmd) {
      CnfFormula formula = load_formula(verify_file, out);
      std::istringstream proof_in(read_text(verify_proof_path));
      Certificate cert = parse_proof(proof_in, formula.num_vars());
      VerifyReport report = verify_certificate(formula, cert);
      if (!report) {
        out << "s NOT VERIFIED\n";
        err << "verify: " << report.diagnostic << '\n';
        return kExitError;
      }
      out << "s VERIFIED " << (cert.satisfiable ? "SAT" : "UNSAT") << '\n';
      return kExitOk;
    }
    if (*oracle_cmd) {
      CnfFormula formula = load_formula(oracle_file, out);
      OracleResult r = brute_force_sat(formula);
      if (r.satisfiable) {
        out << "s SATISFIABLE\n";
        print_model(out, Cube::from_point(*r.witness));
        return kExitSat;
      }
      out << "s UNSATISFIABLE\n";
      return kExitUnsat;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace sspsat
