#include <gtest/gtest.h>

#include <sstream>

#include "golden.hpp"
#include "sspsat/dimacs.hpp"
#include "sspsat/oracle.hpp"
#include "sspsat/proof.hpp"
#include "sspsat/ssc.hpp"
#include "sspsat/symmetry.hpp"
#include "sspsat/trace.hpp"
#include "test_support.hpp"

namespace sspsat {
namespace {

CnfFormula cube_example() { return parse_dimacs_string(golden::kCubeExampleDimacs); }

SscConfig golden_config() {
  SscConfig c;
  c.seed = Cube::from_literals(4, {-2, -3});
  return c;
}

TEST(Dimacs, ParsesMinimalUnsat) {
  CnfFormula f = parse_dimacs_string("p cnf 2 2\n1 0\n-1 0\n");
  EXPECT_EQ(f.num_vars(), 2u);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f.clause(1), Clause::from_dimacs({1}));
  EXPECT_EQ(f.clause(2), Clause::from_dimacs({-1}));
}

TEST(Dimacs, CommentsMultilineClausesAndEndMarker) {
  CnfFormula f = parse_dimacs_string("c hello\np cnf 3 2\n1 -2\n 3 0 -1\n0\n%\n0\n");
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f.clause(1), Clause::from_dimacs({1, -2, 3}));
  EXPECT_EQ(f.clause(2), Clause::from_dimacs({-1}));
}

TEST(Dimacs, Errors) {
  auto line_of = [](const std::string& text) {
    try {
      parse_dimacs_string(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  EXPECT_EQ(line_of("p cnf 1 1\n1 -1 0\n"), 2u);
  EXPECT_EQ(line_of("1 0\n"), 1u);
  EXPECT_EQ(line_of("p cnf 2 1\n1 3 0\n"), 2u);
  EXPECT_EQ(line_of("p dnf 2 1\n"), 1u);
  EXPECT_EQ(line_of("p cnf 2 1\n1 2\n"), 2u);
  EXPECT_EQ(line_of("p cnf 2 1\n1 x 0\n"), 2u);
  EXPECT_EQ(line_of("c only\n"), 1u);
}

TEST(Dimacs, CountMismatchWarns) {
  std::vector<std::string> warnings;
  CnfFormula f = parse_dimacs_string("p cnf 2 3\n1 0\n", &warnings);
  EXPECT_EQ(f.size(), 1u);
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_NE(warnings[0].find("3"), std::string::npos);
}

TEST(Dimacs, RoundTrip) {
  CnfFormula f = cube_example();
  CnfFormula g = parse_dimacs_string(to_dimacs_string(f));
  EXPECT_EQ(g.num_vars(), f.num_vars());
  EXPECT_EQ(g.clauses(), f.clauses());

  f.add_learned(Clause::from_dimacs({-3}));
  EXPECT_EQ(parse_dimacs_string(to_dimacs_string(f)).size(), 5u);

  std::mt19937_64 rng(71);
  for (int i = 0; i < 200; ++i) {
    std::uint32_t n = 1 + rng() % 9;
    CnfFormula r = random_kcnf(n, rng() % 20, std::min<std::uint32_t>(n, 1 + rng() % 3), rng);
    CnfFormula back = parse_dimacs_string(to_dimacs_string(r));
    ASSERT_EQ(back.clauses(), r.clauses());
  }
}

TEST(Oracle, Examples) {
  EXPECT_FALSE(brute_force_sat(cube_example()).satisfiable);
  EXPECT_TRUE(brute_force_sat(ph_formula(3, 3).formula).satisfiable);
  EXPECT_FALSE(brute_force_sat(ph_formula(3, 2).formula).satisfiable);
  auto f = CnfFormula::from_dimacs(3, {{1, 2}, {-1}});
  OracleResult r = brute_force_sat(f);
  ASSERT_TRUE(r.satisfiable);
  EXPECT_EQ(r.witness->to_string(), "010");
  EXPECT_THROW(brute_force_sat(CnfFormula(30)), ContractViolation);
  EXPECT_TRUE(brute_force_sat(CnfFormula(0)).satisfiable);
}

TEST(Oracle, ExhaustiveFamilySize) {
  // 26 non-empty clauses over 3 variables, sets of size 1..4.
  EXPECT_EQ(exhaustive_family(3, 4, 3).size(), 26u + 325u + 2600u + 14950u);
  EXPECT_EQ(exhaustive_family(1, 2, 1).size(), 3u);
}

TEST(Oracle, RandomKcnfShape) {
  std::mt19937_64 rng(72);
  CnfFormula f = random_kcnf(7, 30, 3, rng);
  EXPECT_EQ(f.num_vars(), 7u);
  EXPECT_EQ(f.size(), 30u);
  for (const Clause& c : f.clauses()) EXPECT_EQ(c.size(), 3u);
}

TEST(Trace, GoldenWorkedExample) {
  TraceLog log;
  gen_ssc(cube_example(), golden_config(), &log);
  std::ostringstream out;
  emit_trace(log, out);
  EXPECT_EQ(out.str(), golden::kCubeExampleTrace);
}

TEST(Trace, Deterministic) {
  std::mt19937_64 rng(73);
  for (int i = 0; i < 50; ++i) {
    CnfFormula f = random_kcnf(5, 20, 3, rng);
    std::string first;
    for (int k = 0; k < 2; ++k) {
      TraceLog log;
      gen_ssc(f, {}, &log);
      std::ostringstream out;
      emit_trace(log, out, TraceStyle::Pretty);
      if (k == 0) first = out.str();
      else ASSERT_EQ(first, out.str());
    }
  }
}

TEST(Trace, FinishInvariants) {
  TraceLog log;
  log.add(TraceKind::Initialize, {Cube(2)});
  std::ostringstream out;
  EXPECT_THROW(emit_trace(log, out), ContractViolation);
  log.add(TraceKind::Finish, {std::string("SAT")});
  EXPECT_THROW(log.add(TraceKind::Finish, {}), ContractViolation);
  EXPECT_NO_THROW(emit_trace(log, out));
  EXPECT_EQ(log.records().back().step, 2u);
}

TEST(Trace, Rendering) {
  EXPECT_EQ(render_item(Cube(3), TraceStyle::Dimacs), "0");
  EXPECT_EQ(render_item(Cube(3), TraceStyle::Pretty), "[⊤]");
  EXPECT_EQ(render_item(ClauseRef{9, Clause()}, TraceStyle::Pretty), "C9=(□)");
  EXPECT_EQ(render_item(ClauseRef{9, Clause()}, TraceStyle::Dimacs), "C9 0");
  EXPECT_EQ(render_item(Var{3}, TraceStyle::Pretty), "x3");
}

TEST(Proof, WorkedExampleRoundTrip) {
  CnfFormula f = cube_example();
  SscResult r = gen_ssc(f, golden_config());
  std::ostringstream out;
  emit_proof(certificate_of(r), out);
  EXPECT_EQ(out.str(),
            "learn 6 -2 3 0 from 2 3 pivot 1\n"
            "learn 7 -3 0 from 4 5 pivot 4\n"
            "cluster -2 -3 0 clause 1\n"
            "cluster 2 -3 0 clause 6\n"
            "cluster -2 3 0 clause 7\n"
            "cluster 2 3 0 clause 7\n"
            "result UNSAT\n");
  std::istringstream in(out.str());
  Certificate back = parse_proof(in, 4);
  EXPECT_TRUE(verify_certificate(f, back));
}

TEST(Proof, TamperedCertificatesRejected) {
  CnfFormula f = cube_example();
  Certificate cert = certificate_of(gen_ssc(f, golden_config()));

  Certificate no_cluster = cert;
  no_cluster.clusters.pop_back();
  EXPECT_FALSE(verify_certificate(f, no_cluster));

  Certificate wrong_learn = cert;
  wrong_learn.learned[1].clause = Clause::from_dimacs({-4});
  EXPECT_FALSE(verify_certificate(f, wrong_learn));

  Certificate claims_sat = cert;
  claims_sat.satisfiable = true;
  claims_sat.witness = Cube::from_literals(4, {1, 2, 3, 4});
  EXPECT_FALSE(verify_certificate(f, claims_sat));
}

TEST(Proof, SatCertificate) {
  auto f = CnfFormula::from_dimacs(2, {{1, 2}});
  SscResult r = gen_ssc(f);
  std::ostringstream out;
  emit_proof(certificate_of(r), out);
  std::istringstream in(out.str());
  Certificate back = parse_proof(in, 2);
  EXPECT_TRUE(back.satisfiable);
  EXPECT_TRUE(back.learned.empty());
  EXPECT_TRUE(back.clusters.empty());
  EXPECT_TRUE(verify_certificate(f, back));
}

TEST(Proof, SymmetryCertificate) {
  PhFormula ph = ph_formula(3, 2);
  SymmetryGroup g = ph_symmetry_generators(ph.instance);
  SymSspResult r = gen_ssp_mod_symmetry(ph.formula, g, Point(6));
  std::ostringstream out;
  emit_proof(certificate_of(r, g), out);
  std::istringstream in(out.str());
  Certificate back = parse_proof(in, 6);
  EXPECT_EQ(back.symmetries, g.generators);
  EXPECT_TRUE(verify_certificate(ph.formula, back));

  back.symmetries.push_back(Permutation::transposition(6, 1, 3));
  EXPECT_FALSE(verify_certificate(ph.formula, back));
}

TEST(Proof, ParseErrors) {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return parse_proof(in, 3);
  };
  EXPECT_THROW(parse("learn 4 1 0 from 1 2\nresult UNSAT\n"), ParseError);
  EXPECT_THROW(parse("cluster 1 2 clause 1\nresult UNSAT\n"), ParseError);
  EXPECT_THROW(parse("cluster 1 0 clause 1\n"), ParseError);
  EXPECT_THROW(parse("result UNSAT\ncluster 1 0 clause 1\n"), ParseError);
  EXPECT_THROW(parse("bogus\nresult SAT\n"), ParseError);
  EXPECT_THROW(parse("cluster 7 0 clause 1\nresult UNSAT\n"), ParseError);
}

}  // namespace
}  // namespace sspsat
