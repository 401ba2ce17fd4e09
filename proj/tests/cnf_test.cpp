#include <gtest/gtest.h>

#include "sspsat/cnf.hpp"
#include "test_support.hpp"

namespace sspsat {
namespace {

// C1..C7 of the six-variable chain example.
CnfFormula chain_formula() {
  return CnfFormula::from_dimacs(6, {{1, 2}, {-2, 3}, {-3, 4}, {-4, 1}, {-1, 5}, {-5, 6}, {-6, -1}});
}

// C1..C5 of the four-variable cube example.
CnfFormula cube_example() {
  return CnfFormula::from_dimacs(4, {{2, 3}, {1, -2}, {-1, -2, 3}, {-3, 4}, {-3, -4}});
}

TEST(Literal, NegationIsAnInvolution) {
  Lit x = Lit::from_dimacs(3);
  EXPECT_NE(x, ~x);
  EXPECT_EQ(x, ~~x);
  EXPECT_EQ((~x).to_dimacs(), -3);
}

TEST(Clause, CanonicalOrderAndDuplicateCollapse) {
  Clause c = Clause::from_dimacs({4, -1, 4, 2});
  EXPECT_EQ(c.to_string(), "-1 2 4");
  EXPECT_EQ(c, Clause::from_dimacs({2, 4, -1}));
}

TEST(Clause, TautologyRejected) {
  EXPECT_THROW(Clause::from_dimacs({1, -1}), ContractViolation);
  EXPECT_THROW(Clause::from_dimacs({2, 3, -2}), ContractViolation);
}

TEST(Formula, IdsAreStableAndLearnedAppend) {
  CnfFormula f = cube_example();
  EXPECT_EQ(f.original_count(), 5u);
  ClauseId id = f.add_learned(Clause::from_dimacs({-2, 3}));
  EXPECT_EQ(id, 6u);
  EXPECT_EQ(f.clause(6).id(), 6u);
  EXPECT_EQ(f.original_count(), 5u);
  EXPECT_EQ(f.find(Clause::from_dimacs({3, -2})), std::optional<ClauseId>(6));
  EXPECT_THROW(f.add_clause(Clause::from_dimacs({1})), ContractViolation);
  EXPECT_THROW(f.add_learned(Clause::from_dimacs({5})), ContractViolation);
}

TEST(EvaluateClause, Examples) {
  EXPECT_EQ(evaluate_clause(Clause::from_dimacs({1, -3, 4}), Point::from_bits("0110")),
            ClauseValue::Falsified);
  EXPECT_EQ(evaluate_clause(Clause(), Point::from_bits("1010")), ClauseValue::Falsified);
  EXPECT_EQ(evaluate_clause(Clause::from_dimacs({2, 3}), Point::from_bits("000000")),
            ClauseValue::Falsified);
  EXPECT_EQ(evaluate_clause(Clause::from_dimacs({2, 3}), Point::from_bits("010000")),
            ClauseValue::Satisfied);
}

TEST(EvaluateClause, ArityMismatchIsAContractViolation) {
  EXPECT_THROW(evaluate_clause(Clause::from_dimacs({5}), Point::from_bits("0000")),
               ContractViolation);
}

TEST(FalsifiedClauses, Examples) {
  EXPECT_EQ(falsified_clauses(chain_formula(), Point::from_bits("111111")),
            std::vector<ClauseId>{7});
  EXPECT_TRUE(falsified_clauses(CnfFormula::from_dimacs(1, {{1}}), Point::from_bits("1")).empty());
  // Truth-table check of C1..C5 at 0000: only x2 ∨ x3 has no true literal.
  EXPECT_EQ(falsified_clauses(cube_example(), Point::from_bits("0000")),
            std::vector<ClauseId>{1});
  EXPECT_THROW(falsified_clauses(cube_example(), Point::from_bits("000")), ContractViolation);
}

TEST(Resolution, ResolvableOn) {
  auto c2 = Clause::from_dimacs({1, -2});
  auto c3 = Clause::from_dimacs({-1, -2, 3});
  EXPECT_EQ(resolvable_on(c2, c3), std::optional<Var>(Var{1}));
  EXPECT_EQ(resolvable_on(Clause::from_dimacs({1, 2}), Clause::from_dimacs({1, 2})), std::nullopt);
  EXPECT_EQ(resolvable_on(Clause::from_dimacs({1, 2}), Clause::from_dimacs({-1, -2})),
            std::nullopt);
}

TEST(Resolution, Resolve) {
  EXPECT_EQ(resolve(Clause::from_dimacs({1, -2}), Clause::from_dimacs({-1, -2, 3}), Var{1}),
            Clause::from_dimacs({-2, 3}));
  EXPECT_EQ(resolve(Clause::from_dimacs({-3, 4}), Clause::from_dimacs({-3, -4}), Var{4}),
            Clause::from_dimacs({-3}));
  EXPECT_TRUE(resolve(Clause::from_dimacs({1}), Clause::from_dimacs({-1}), Var{1}).empty());
  EXPECT_THROW(resolve(Clause::from_dimacs({1, 2}), Clause::from_dimacs({-1, 3}), Var{2}),
               ContractViolation);
}

TEST(Resolution, SymmetricInArguments) {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int i = 0; i < 2000; ++i) {
    auto a = testing::random_clause(6, 4, rng);
    auto b = testing::random_clause(6, 4, rng);
    auto pivot = resolvable_on(a, b);
    EXPECT_EQ(pivot, resolvable_on(b, a));
    if (!pivot) continue;
    EXPECT_EQ(resolve(a, b, *pivot), resolve(b, a, *pivot));
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(Resolution, ResolventImpliedByAntecedents) {
  // Every point satisfying both antecedents satisfies the resolvent.
  std::mt19937_64 rng(12);
  auto points = testing::all_points(5);
  for (int i = 0; i < 500; ++i) {
    auto a = testing::random_clause(5, 4, rng);
    auto b = testing::random_clause(5, 4, rng);
    auto pivot = resolvable_on(a, b);
    if (!pivot) continue;
    Clause r = resolve(a, b, *pivot);
    for (const Point& p : points) {
      if (!testing::falsifies_brute(a, p) && !testing::falsifies_brute(b, p)) {
        ASSERT_FALSE(testing::falsifies_brute(r, p));
      }
    }
  }
}

TEST(PointNbhd, Examples) {
  auto nb = point_nbhd(Point::from_bits("0110"), Clause::from_dimacs({1, -3, 4}));
  EXPECT_EQ(testing::as_strings(nb), (std::set<std::string>{"1110", "0100", "0111"}));

  auto unit = point_nbhd(Point::from_bits("000"), Clause::from_dimacs({1}));
  ASSERT_EQ(unit.size(), 1u);
  EXPECT_EQ(unit[0].to_string(), "100");

  auto p10 = point_nbhd(Point::from_bits("010011"), Clause::from_dimacs({-2, 3}));
  EXPECT_EQ(testing::as_strings(p10), (std::set<std::string>{"000011", "011011"}));
}

TEST(PointNbhd, SatisfyingPointRejected) {
  EXPECT_THROW(point_nbhd(Point::from_bits("1000"), Clause::from_dimacs({1, 2})),
               ContractViolation);
}

TEST(PointNbhd, SizeDistanceAndSatisfaction) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 1000; ++i) {
    std::uint32_t n = 1 + rng() % 10;
    Clause c = testing::random_clause(n, n, rng);
    Point p = testing::falsifying_point(c, n, rng);
    auto nb = point_nbhd(p, c);
    ASSERT_EQ(nb.size(), c.size());
    for (const Point& q : nb) {
      EXPECT_FALSE(testing::falsifies_brute(c, q));
      int distance = 0;
      for (std::uint32_t v = 1; v <= n; ++v) distance += p[Var{v}] != q[Var{v}];
      EXPECT_EQ(distance, 1);
    }
  }
}

}  // namespace
}  // namespace sspsat
