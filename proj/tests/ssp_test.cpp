#include <gtest/gtest.h>

#include "sspsat/oracle.hpp"
#include "sspsat/ssp.hpp"
#include "test_support.hpp"

namespace sspsat {
namespace {

CnfFormula chain_formula() {
  return CnfFormula::from_dimacs(6, {{1, 2}, {-2, 3}, {-3, 4}, {-4, 1}, {-1, 5}, {-5, 6}, {-6, -1}});
}

// p1..p14 with the transport listed alongside them.
const std::vector<std::pair<std::string, ClauseId>> kFourteen = {
    {"000000", 1}, {"010000", 2}, {"011000", 3}, {"011100", 4}, {"111100", 5},
    {"111110", 6}, {"111111", 7}, {"011111", 4}, {"011011", 3}, {"010011", 2},
    {"000011", 1}, {"100011", 7}, {"100010", 6}, {"100000", 5}};

std::pair<std::vector<Point>, PointTransport> fourteen_points() {
  std::vector<Point> pts;
  PointTransport g;
  for (const auto& [bits, id] : kFourteen) {
    pts.push_back(Point::from_bits(bits));
    g.emplace(pts.back(), id);
  }
  return {pts, g};
}

TEST(VerifySsp, FourteenPointSetIsStable) {
  auto [pts, g] = fourteen_points();
  EXPECT_TRUE(verify_ssp(chain_formula(), pts, g));
}

TEST(VerifySsp, DroppingP9Fails) {
  auto [pts, g] = fourteen_points();
  Point p9 = Point::from_bits("011011");
  pts.erase(std::find(pts.begin(), pts.end(), p9));
  g.erase(p9);
  VerifyReport r = verify_ssp(chain_formula(), pts, g);
  EXPECT_FALSE(r);
  EXPECT_NE(r.diagnostic.find("011011"), std::string::npos) << r.diagnostic;
}

TEST(VerifySsp, WrongTransportFails) {
  auto [pts, g] = fourteen_points();
  g[Point::from_bits("000000")] = 2;
  EXPECT_FALSE(verify_ssp(chain_formula(), pts, g));
}

TEST(VerifySsp, FullSpaceIsStable) {
  auto f = CnfFormula::from_dimacs(2, {{1}, {-1}});
  std::vector<Point> pts = testing::all_points(2);
  PointTransport g;
  for (const Point& p : pts) g.emplace(p, falsified_clauses(f, p).front());
  EXPECT_TRUE(verify_ssp(f, pts, g));
}

TEST(GenSsp, ReproducesFourteenPointSet) {
  SspResult r = gen_ssp(chain_formula(), Point::from_bits("000000"));
  ASSERT_FALSE(r.satisfiable);
  EXPECT_EQ(testing::as_strings(r.points), testing::as_strings(fourteen_points().first));
  for (const auto& [bits, id] : kFourteen) {
    EXPECT_EQ(r.transport.at(Point::from_bits(bits)), id) << bits;
  }
  EXPECT_TRUE(verify_ssp(chain_formula(), r.points, r.transport));
}

TEST(GenSsp, TrivialCases) {
  auto unsat = CnfFormula::from_dimacs(1, {{1}, {-1}});
  SspResult r = gen_ssp(unsat, Point::from_bits("0"));
  EXPECT_FALSE(r.satisfiable);
  EXPECT_EQ(testing::as_strings(r.points), (std::set<std::string>{"0", "1"}));

  auto sat = CnfFormula::from_dimacs(2, {{1, 2}});
  SspResult s = gen_ssp(sat, Point::from_bits("11"));
  ASSERT_TRUE(s.satisfiable);
  EXPECT_EQ(s.witness->to_string(), "11");
}

TEST(GenSsp, ContractViolations) {
  EXPECT_THROW(gen_ssp(chain_formula(), Point::from_bits("000")), ContractViolation);
}

TEST(PickClause, Policies) {
  auto f = CnfFormula::from_dimacs(3, {{1, 2, 3}, {1}, {1, 2}});
  EXPECT_EQ(pick_clause(f, {1, 2, 3}, ClausePick::First), 1u);
  EXPECT_EQ(pick_clause(f, {1, 2, 3}, ClausePick::Shortest), 2u);
  EXPECT_THROW(pick_clause(f, {}, ClausePick::First), ContractViolation);
}

class SspOracle : public ::testing::TestWithParam<std::tuple<PopPolicy, ClausePick>> {};

TEST_P(SspOracle, AgreesWithTruthTable) {
  auto [pop, pick] = GetParam();
  std::mt19937_64 rng(41);
  for (int i = 0; i < 400; ++i) {
    std::uint32_t n = 1 + rng() % 4;
    CnfFormula f = random_kcnf(n, 1 + rng() % 12, std::min<std::uint32_t>(n, 1 + rng() % 3), rng);
    Point init = testing::random_point(n, rng);
    SspResult r = gen_ssp(f, init, {pop, pick});
    ASSERT_EQ(r.satisfiable, brute_force_sat(f).satisfiable);
    if (r.satisfiable) {
      ASSERT_TRUE(falsified_clauses(f, *r.witness).empty());
    } else {
      ASSERT_TRUE(verify_ssp(f, r.points, r.transport));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Configs, SspOracle,
                         ::testing::Combine(::testing::Values(PopPolicy::Fifo, PopPolicy::Lifo),
                                            ::testing::Values(ClausePick::First,
                                                              ClausePick::Shortest)));

}  // namespace
}  // namespace sspsat
