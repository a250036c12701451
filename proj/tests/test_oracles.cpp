#include <gtest/gtest.h>

#include "dlout/depgraph.hpp"
#include "dlout/errors.hpp"
#include "dlout/oracles.hpp"
#include "dlout/outliers.hpp"
#include "dlout/parser.hpp"
#include "dlout/semantics.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace dlout;
using dlout::testing::BruteForce;
using dlout::testing::lits;
using dlout::testing::subsets;

namespace {

const char* kUnit = "p cnf 1 1\n1 1 1 0\n";
const char* kContradiction = "p cnf 1 2\n1 1 1 0\n-1 -1 -1 0\n";

// Is there S within x1..xn with (D, W \ S) entailing the negation of S and
// every clause letter?
bool lemma4_holds(const GeneratedTheory& g, const LiteralSet& S) {
  LiteralSet goal = S.negated();
  for (const auto& c : g.designated.c) goal.insert(Literal(c, true));
  return entails(g.theory.with_facts(g.theory.facts().minus(S)), goal, Backend::fast);
}

bool lemma4_some(const GeneratedTheory& g) {
  for (const auto& S : subsets(g.theory.facts(), 0, g.theory.facts().size())) {
    if (lemma4_holds(g, S)) return true;
  }
  return false;
}

bool general_outlier(const DefaultTheory& theory, const LiteralSet& L) {
  BruteForce brute(theory, BruteForce::querying(Backend::fast));
  for (const auto& S : subsets(theory.facts().minus(L), 1, theory.facts().size())) {
    if (brute.general(L, S)) return true;
  }
  return false;
}

bool strong_outlier(const DefaultTheory& theory, const LiteralSet& L) {
  BruteForce brute(theory, BruteForce::querying(Backend::fast));
  for (const auto& S : subsets(theory.facts().minus(L), 1, theory.facts().size())) {
    if (brute.strong(L, S)) return true;
  }
  return false;
}

LiteralSet not_l() { return LiteralSet{Literal("_l", true)}; }

}  // namespace

TEST(DimacsTest, ParsesAndPads) {
  Cnf3 phi = parse_dimacs("c comment\np cnf 3 2\n1 -2 0\n3 0\n");
  EXPECT_EQ(phi.variable_count, 3);
  ASSERT_EQ(phi.clauses.size(), 2U);
  EXPECT_EQ(phi.clauses[0], (std::array<int, 3>{1, -2, -2}));
  EXPECT_EQ(phi.clauses[1], (std::array<int, 3>{3, 3, 3}));
  EXPECT_EQ(parse_dimacs(to_dimacs(phi)), phi);
}

TEST(DimacsTest, DataFiles) {
  EXPECT_FALSE(sat(parse_dimacs(dlout::testing::read_data("unsat.cnf"))).satisfiable);
  EXPECT_TRUE(sat(parse_dimacs(dlout::testing::read_data("sat.cnf"))).satisfiable);
}

TEST(DimacsTest, Errors) {
  EXPECT_THROW(parse_dimacs("1 2 3 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 2 -1 2 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 5 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 2 2\n1 2 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 2\n"), ParseError);
}

TEST(SatTest, Examples) {
  SatResult unit = sat(parse_dimacs(kUnit));
  EXPECT_TRUE(unit.satisfiable);
  EXPECT_EQ(unit.model, (std::vector<bool>{true}));
  EXPECT_EQ(unit.model_literals, lits("x1"));
  EXPECT_FALSE(sat(parse_dimacs(kContradiction)).satisfiable);
}

TEST(SatTest, ModelsSatisfyTheFormula) {
  int satisfiable = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Cnf3 phi = random_cnf(4, 8, seed);
    EXPECT_EQ(phi.clauses.size(), 8U);
    SatResult r = sat(phi);
    if (r.satisfiable) {
      ++satisfiable;
      EXPECT_TRUE(evaluate(phi, r.model));
    } else {
      // No assignment works.
      for (unsigned mask = 0; mask < 16; ++mask) {
        std::vector<bool> a{bool(mask & 1), bool(mask & 2), bool(mask & 4), bool(mask & 8)};
        EXPECT_FALSE(evaluate(phi, a));
      }
    }
  }
  EXPECT_GT(satisfiable, 0);
}

TEST(SatTest, SizeGuard) {
  Cnf3 phi = random_cnf(21, 3, 1);
  EXPECT_THROW(sat(phi), SizeGuardError);
  EXPECT_NO_THROW(sat(phi, 21));
}

TEST(ConstructionTest, Names) {
  for (auto c : {Construction::lemma4, Construction::thm8, Construction::thm9,
                 Construction::thm10}) {
    EXPECT_EQ(parse_construction(to_string(c)), c);
  }
  EXPECT_THROW(parse_construction("thm11"), std::invalid_argument);
}

TEST(Lemma4Test, SatisfiableUnitClause) {
  GeneratedTheory g = build_lemma4(parse_dimacs(kUnit));
  EXPECT_EQ(classify(g.theory).tag, FragmentTag::NU);
  EXPECT_EQ(lemma4_witness({true}), LiteralSet{});
  EXPECT_TRUE(entails(g.theory, lits("-_c1"), Backend::exhaustive));
}

TEST(Lemma4Test, UnsatisfiableHasNoWitness) {
  GeneratedTheory g = build_lemma4(parse_dimacs(kContradiction));
  for (const auto& S : subsets(lits("x1"), 0, 1)) {
    LiteralSet goal = S.negated().unite(lits("-_c1,-_c2"));
    EXPECT_FALSE(entails(g.theory.with_facts(g.theory.facts().minus(S)), goal,
                         Backend::exhaustive));
  }
}

TEST(Lemma4Test, RulesAsStated) {
  GeneratedTheory g = build_lemma4(parse_dimacs("p cnf 2 1\n1 -2 -2 0\n"));
  DefaultTheory expected = parse_theory(
      "fact x1. fact x2.\n"
      "default x1 : -_y1 / -_y1. default : _y1 / _y1.\n"
      "default x2 : -_y2 / -_y2. default : _y2 / _y2.\n"
      "default x1 : -_c1 / -_c1. default _y2 : -_c1 / -_c1.\n"
      "default : -x1 / -x1. default : -x2 / -x2.\n");
  EXPECT_EQ(g.theory, expected);
  EXPECT_EQ(g.designated.y, (std::vector<std::string>{"_y1", "_y2"}));
}

TEST(Thm8Test, ShapeAndExamples) {
  for (const char* text : {kUnit, kContradiction}) {
    GeneratedTheory g = build_thm8(parse_dimacs(text));
    EXPECT_EQ(classify(g.theory).tag, FragmentTag::NU);
    EXPECT_EQ(tightness(g.theory), 1U);
    EXPECT_TRUE(g.theory.facts().contains(Literal("_l", true)));
    EXPECT_TRUE(g.theory.facts().contains(Literal("_c0")));
  }
  EXPECT_TRUE(general_outlier(build_thm8(parse_dimacs(kUnit)).theory, not_l()));
  EXPECT_FALSE(general_outlier(build_thm8(parse_dimacs(kContradiction)).theory, not_l()));
}

TEST(Thm9Test, ShapeAndExamples) {
  for (const char* text : {kUnit, kContradiction}) {
    GeneratedTheory g = build_thm9(parse_dimacs(text));
    EXPECT_EQ(classify(g.theory).tag, FragmentTag::NU);
    EXPECT_GT(tightness(g.theory), 1U);
  }
  EXPECT_TRUE(strong_outlier(build_thm9(parse_dimacs(kUnit)).theory, not_l()));
  EXPECT_FALSE(strong_outlier(build_thm9(parse_dimacs(kContradiction)).theory, not_l()));
}

TEST(Thm10Test, ShapeAndExamples) {
  GeneratedTheory sat_case = build_thm10(parse_dimacs(kUnit));
  GeneratedTheory unsat_case = build_thm10(parse_dimacs(kContradiction));
  EXPECT_EQ(classify(sat_case.theory).tag, FragmentTag::NMU);
  EXPECT_EQ(tightness(sat_case.theory), 1U);
  EXPECT_TRUE(sat_case.theory.facts().empty());
  EXPECT_FALSE(entails(sat_case.theory, lits("_l"), Backend::exhaustive));
  EXPECT_TRUE(entails(unsat_case.theory, lits("_l"), Backend::exhaustive));
}

TEST(RandomTheoryTest, Examples) {
  TheoryProfile nu;
  nu.letters = 6;
  nu.rules = 8;
  nu.tightness = 1;
  nu.seed = 42;
  EXPECT_EQ(random_theory(nu), random_theory(nu));
  EXPECT_EQ(tightness(random_theory(nu)), 1U);

  TheoryProfile nmu;
  nmu.fragment = FragmentTag::NMU;
  nmu.letters = 5;
  nmu.rules = 10;
  nmu.tightness = 2;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    nmu.seed = seed;
    DefaultTheory t = random_theory(nmu);
    EXPECT_EQ(classify(t).tag, FragmentTag::NMU);
    EXPECT_LE(tightness(t), 2U);
    EXPECT_TRUE(t.facts().is_consistent());
  }
}

TEST(RandomTheoryTest, InfeasibleProfiles) {
  TheoryProfile p;
  p.tightness = 7;
  EXPECT_THROW(random_theory(p), InfeasibleProfile);
  p.tightness = 0;
  EXPECT_THROW(random_theory(p), InfeasibleProfile);
  p.tightness = 1;
  p.rules = 1;
  p.fragment = FragmentTag::NMU;
  EXPECT_THROW(random_theory(p), InfeasibleProfile);
}

// The four equivalences on random small formulas. The acceptance binary
// covers the exhaustive formula space.
TEST(ReductionPropertyTest, EquivalencesOnRandomFormulas) {
  int satisfiable = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    int n = 1 + static_cast<int>(seed % 3);
    int m = 1 + static_cast<int>(seed / 3 % 3);
    Cnf3 phi = random_cnf(n, m, seed);
    SCOPED_TRACE(to_dimacs(phi));
    SatResult r = sat(phi);
    satisfiable += r.satisfiable;

    GeneratedTheory l4 = build_lemma4(phi);
    EXPECT_EQ(lemma4_some(l4), r.satisfiable);
    if (r.satisfiable) EXPECT_TRUE(lemma4_holds(l4, lemma4_witness(r.model)));

    EXPECT_EQ(general_outlier(build_thm8(phi).theory, not_l()), r.satisfiable);
    EXPECT_EQ(strong_outlier(build_thm9(phi).theory, not_l()), r.satisfiable);
    EXPECT_EQ(entails(build_thm10(phi).theory, lits("_l"), Backend::exhaustive),
              !r.satisfiable);
  }
  EXPECT_GT(satisfiable, 0);
  EXPECT_LT(satisfiable, 40);
}

TEST(ReductionPropertyTest, FreshLettersAndRoundTrip) {
  ParseOptions strict;
  strict.reject_reserved_letters = true;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Cnf3 phi = random_cnf(3, 4, seed);
    for (auto c : {Construction::lemma4, Construction::thm8, Construction::thm9,
                   Construction::thm10}) {
      GeneratedTheory g = build(c, phi);
      EXPECT_EQ(parse_theory(to_text(g.theory)), g.theory);
      // Every letter outside x1..xn uses a reserved prefix.
      for (const auto& letter : g.theory.letters()) {
        bool variable = letter[0] == 'x';
        EXPECT_TRUE(variable || is_reserved_letter(letter)) << letter;
      }
      EXPECT_THROW(parse_theory(to_text(g.theory), strict), ParseError);
    }
  }
}

TEST(ReductionPropertyTest, OutlierDetectorAgreesOnConstructions) {
  // The polynomial path on the acyclic construction and the general search
  // on the cyclic one give the same answers as the brute force.
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Cnf3 phi = random_cnf(2, 1 + seed % 3, seed);
    bool s = sat(phi).satisfiable;
    GeneratedTheory g8 = build_thm8(phi);
    OutlierDetector d8(g8.theory);
    EXPECT_EQ(d8.recognize_general(not_l(), g8.theory.facts().size()).is_outlier(), s);
    GeneratedTheory g9 = build_thm9(phi);
    OutlierDetector d9(g9.theory);
    EXPECT_EQ(d9.recognize_strong(not_l()).is_outlier(), s);
  }
}
