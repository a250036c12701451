// Acceptance run: one [PASS]/[FAIL] line per criterion. Exit status is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "dlout/depgraph.hpp"
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

// Pinned thresholds.
constexpr double kGoldenSeconds = 1.0;
constexpr int kBackendTheories = 1000;
constexpr std::size_t kBackendMaxLetters = 8;
constexpr std::size_t kBackendMaxRules = 12;
constexpr int kEnumerationTheories = 300;
constexpr std::size_t kEnumerationMaxLetters = 8;
constexpr int kReductionRandom = 200;
constexpr int kReductionMaxVariables = 5;
constexpr double kReductionSeconds = 600.0;
constexpr int kIncrementalTrials = 1000;
constexpr int kLemma13Trials = 300;
constexpr int kSemiMonotonicTrials = 500;
constexpr std::size_t kPerfLetters = 150;
constexpr std::size_t kPerfRules = 200;
constexpr double kPerfSeconds = 60.0;
constexpr double kPerfMaxRatio = 32.0;
constexpr int kPerfRepeats = 3;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int number, const char* title, const std::function<Verdict()>& check) {
  auto start = Clock::now();
  Verdict v;
  try {
    v = check();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  if (!v.pass) ++failures;
  std::printf("[%s] %d %s: %s (%.2f s)\n", v.pass ? "PASS" : "FAIL", number, title,
              v.detail.c_str(), seconds_since(start));
  std::fflush(stdout);
}

// ---- 1 ----------------------------------------------------------------

Verdict golden() {
  auto start = Clock::now();
  int wrong = 0;
  auto expect = [&](bool value) { wrong += !value; };
  DefaultTheory credit = dlout::testing::creditcard();
  DefaultTheory cell = dlout::testing::cellphone();
  LiteralSet s4 = lits("-MfC,NewLocation,QuietTime,MultipleIPs");
  for (Backend b : {Backend::exhaustive, Backend::fast}) {
    DetectorOptions options;
    options.backend = b;
    OutlierDetector c(credit, options);
    expect(c.is_witness(lits("CreditNumber"), lits("MultipleIPs")));
    expect(c.is_strong_witness(lits("CreditNumber"), lits("MultipleIPs")));
    expect(c.enumerate_strong(1).outliers() == std::vector<LiteralSet>{lits("CreditNumber")});

    OutlierDetector p(cell, options);
    for (const char* L : {"CreditNumber", "CellUse"}) {
      expect(p.is_witness(lits(L), s4.minus(lits(L))));
      expect(!p.is_strong_witness(lits(L), s4.minus(lits(L))));
    }
    expect(p.is_strong_witness(lits("CreditNumber"), lits("MultipleIPs")));
    for (const auto& S : subsets(lits("-MfC,NewLocation,QuietTime"), 1, 3)) {
      expect(p.is_strong_witness(lits("CellUse"), S));
    }
  }
  double elapsed = seconds_since(start);
  Verdict v;
  v.pass = wrong == 0 && elapsed < kGoldenSeconds;
  v.detail = std::to_string(wrong) + " wrong answers, " + std::to_string(elapsed) +
             " s (limit " + std::to_string(kGoldenSeconds) + " s)";
  return v;
}

// ---- 2 ----------------------------------------------------------------

Verdict backend_equivalence() {
  std::mt19937_64 rng(2);
  long queries = 0, disagreements = 0;
  for (int seed = 0; seed < kBackendTheories; ++seed) {
    TheoryProfile profile;
    profile.fragment = FragmentTag::NU;
    profile.letters = 1 + seed % kBackendMaxLetters;
    profile.rules = 1 + (seed / 8) % kBackendMaxRules;
    profile.tightness = 1 + (seed / 3) % profile.letters;
    profile.seed = static_cast<std::uint64_t>(seed);
    DefaultTheory nu = random_theory(profile);
    for (const DefaultTheory& t : {nu, dualize(nu)}) {
      Reasoner fast(t, Backend::fast);
      Reasoner slow(t, Backend::exhaustive);
      const std::size_t letters = fast.compiled().letter_count();
      // The theory's own facts, then random fact sets over the same letters.
      std::vector<Facts> fact_sets{fast.compiled().facts()};
      for (int extra = 0; extra < 3; ++extra) {
        Facts random(letters);
        for (LetterId x = 0; x < letters; ++x) {
          auto roll = rng() % 3;
          if (roll < 2) random.add(make_code(x, roll == 1));
        }
        fact_sets.push_back(random);
      }
      for (const Facts& facts : fact_sets) {
        for (LitCode q = 0; q < 2 * letters; ++q) {
          ++queries;
          disagreements += fast.entails(facts, q) != slow.entails(facts, q);
        }
      }
    }
  }
  return {disagreements == 0, std::to_string(2 * kBackendTheories) + " theories, " +
                                  std::to_string(queries) + " queries, " +
                                  std::to_string(disagreements) + " disagreements"};
}

// ---- 3 ----------------------------------------------------------------

Verdict enumeration_vs_brute_force() {
  int mismatches = 0, outliers = 0;
  for (int seed = 0; seed < kEnumerationTheories; ++seed) {
    TheoryProfile profile;
    profile.fragment = FragmentTag::NU;
    profile.letters = 2 + seed % (kEnumerationMaxLetters - 1);
    profile.rules = 1 + (seed / 7) % 12;
    profile.tightness = 1 + seed % 2;
    profile.seed = 1000 + static_cast<std::uint64_t>(seed);
    DefaultTheory t = random_theory(profile);
    BruteForce brute(t);
    OutlierDetector detector(t);
    for (std::size_t k = 1; k <= 2; ++k) {
      auto expected = brute.strong_outliers(k);
      outliers += static_cast<int>(expected.size());
      mismatches += detector.enumerate_strong(k).outliers() != expected;
    }
  }
  return {mismatches == 0, std::to_string(kEnumerationTheories) + " theories x k=1..2, " +
                               std::to_string(outliers) + " outliers, " +
                               std::to_string(mismatches) + " mismatches"};
}

// ---- 4 ----------------------------------------------------------------

// Definition-level outlier test for L = {-_l}: every S within W \ L.
bool outlier_by_definition(const DefaultTheory& theory, bool strong) {
  Reasoner reasoner(theory, Backend::fast);
  const CompiledTheory& compiled = reasoner.compiled();
  LitCode l = *compiled.encode(Literal("_l", true));
  std::vector<LitCode> pool;
  for (LitCode c : compiled.fact_codes()) {
    if (c != l) pool.push_back(c);
  }
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << pool.size()); ++mask) {
    std::vector<LitCode> S, negated;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if ((mask >> i) & 1U) {
        S.push_back(pool[i]);
        negated.push_back(complement(pool[i]));
      }
    }
    Facts with_l = compiled.facts();
    for (LitCode c : S) with_l.remove(c);
    if (!reasoner.entails_all(with_l, negated)) continue;
    Facts without_l = with_l;
    without_l.remove(l);
    bool second = true;
    if (strong) {
      for (LitCode c : negated) second = second && !reasoner.entails(without_l, c);
    } else {
      second = !reasoner.entails_all(without_l, negated);
    }
    if (second) return true;
  }
  return false;
}

bool lemma4_check(const GeneratedTheory& g, const LiteralSet& S) {
  LiteralSet goal = S.negated();
  for (const auto& c : g.designated.c) goal.insert(Literal(c, true));
  return entails(g.theory.with_facts(g.theory.facts().minus(S)), goal, Backend::fast);
}

// Returns the number of mismatching equivalences for one formula.
int reduction_mismatches(const Cnf3& phi) {
  SatResult r = sat(phi);
  int wrong = 0;
  GeneratedTheory l4 = build_lemma4(phi);
  bool some = false;
  for (const auto& S : subsets(l4.theory.facts(), 0, l4.theory.facts().size())) {
    if (lemma4_check(l4, S)) {
      some = true;
      break;
    }
  }
  wrong += some != r.satisfiable;
  if (r.satisfiable) wrong += !lemma4_check(l4, lemma4_witness(r.model));
  wrong += outlier_by_definition(build_thm8(phi).theory, false) != r.satisfiable;
  wrong += outlier_by_definition(build_thm9(phi).theory, true) != r.satisfiable;
  wrong += entails(build_thm10(phi).theory, lits("_l"), Backend::exhaustive) == r.satisfiable;
  return wrong;
}

// Every formula whose clauses are distinct sets of 1..3 literals, padded to
// three by repetition.
std::vector<Cnf3> all_small_formulas(int n, int max_clauses) {
  std::vector<int> literals;
  for (int i = 1; i <= n; ++i) {
    literals.push_back(i);
    literals.push_back(-i);
  }
  std::vector<std::array<int, 3>> clauses;
  const std::size_t L = literals.size();
  for (std::size_t a = 0; a < L; ++a) {
    clauses.push_back({literals[a], literals[a], literals[a]});
    for (std::size_t b = a + 1; b < L; ++b) {
      clauses.push_back({literals[a], literals[b], literals[b]});
      for (std::size_t c = b + 1; c < L; ++c) {
        clauses.push_back({literals[a], literals[b], literals[c]});
      }
    }
  }
  std::vector<Cnf3> out;
  std::function<void(std::size_t, Cnf3&)> extend = [&](std::size_t from, Cnf3& phi) {
    if (!phi.clauses.empty()) out.push_back(phi);
    if (static_cast<int>(phi.clauses.size()) == max_clauses) return;
    for (std::size_t i = from; i < clauses.size(); ++i) {
      phi.clauses.push_back(clauses[i]);
      extend(i + 1, phi);
      phi.clauses.pop_back();
    }
  };
  Cnf3 phi;
  phi.variable_count = n;
  extend(0, phi);
  return out;
}

Verdict reductions() {
  auto start = Clock::now();
  long formulas = 0, satisfiable = 0;
  int wrong = 0;
  for (int n = 1; n <= 3; ++n) {
    for (const Cnf3& phi : all_small_formulas(n, 3)) {
      ++formulas;
      satisfiable += sat(phi).satisfiable;
      wrong += reduction_mismatches(phi);
    }
  }
  long exhaustive = formulas;
  for (int i = 0; i < kReductionRandom; ++i) {
    int n = 1 + i % kReductionMaxVariables;
    int m = 1 + (i / kReductionMaxVariables) % (n + 4);
    Cnf3 phi = random_cnf(n, m, 5000 + static_cast<std::uint64_t>(i));
    ++formulas;
    satisfiable += sat(phi).satisfiable;
    wrong += reduction_mismatches(phi);
  }
  double elapsed = seconds_since(start);
  return {wrong == 0 && elapsed < kReductionSeconds,
          std::to_string(exhaustive) + " exhaustive + " + std::to_string(kReductionRandom) +
              " random formulas (" + std::to_string(satisfiable) + " satisfiable), " +
              std::to_string(wrong) + " mismatches, " + std::to_string(elapsed) +
              " s (limit " + std::to_string(kReductionSeconds) + " s)"};
}

// ---- 5 ----------------------------------------------------------------

Verdict incremental_lemma() {
  std::mt19937_64 rng(2024);
  int trials = 0, violations = 0, brave_cases = 0, skeptical_cases = 0;
  for (std::uint64_t seed = 0; trials < kIncrementalTrials; ++seed) {
    TheoryProfile profile;
    profile.fragment = FragmentTag::NMU;
    profile.letters = 3 + seed % 6;
    profile.rules = 2 + seed % 10;
    profile.tightness = 1 + seed % 3;
    profile.seed = 7000 + seed;
    DefaultTheory t = random_theory(profile);
    DependencyGraph graph = build_graph(t);
    auto letters = t.letters();
    Literal q(letters[rng() % letters.size()], rng() % 2 == 1);
    // S over letters that do not reach q, agreeing with W where W has a sign.
    LiteralSet S;
    for (const auto& letter : letters) {
      if (influences(graph, LiteralSet{Literal(letter)}, q)) continue;
      if (rng() % 2) continue;
      Literal s(letter, rng() % 2 == 1);
      if (t.facts().contains(s.negate())) s = s.negate();
      S.insert(s);
    }
    if (S.empty() || !t.facts().unite(S).is_consistent()) continue;
    ++trials;
    auto before = extensions(t);
    auto after = extensions(t.with_facts(t.facts().unite(S)));
    auto in_some = [&](const std::vector<SignatureSet>& exts) {
      return std::any_of(exts.begin(), exts.end(), [&](const auto& e) { return e.contains(q); });
    };
    auto in_all = [&](const std::vector<SignatureSet>& exts) {
      return std::all_of(exts.begin(), exts.end(), [&](const auto& e) { return e.contains(q); });
    };
    if (in_some(before)) {
      ++brave_cases;
      violations += !in_some(after);
    }
    if (in_all(before)) {
      ++skeptical_cases;
      violations += !in_all(after);
    }
  }
  return {violations == 0, std::to_string(trials) + " trials (" + std::to_string(brave_cases) +
                               " brave, " + std::to_string(skeptical_cases) +
                               " skeptical premises), " + std::to_string(violations) +
                               " violations"};
}

// ---- 6 ----------------------------------------------------------------

Verdict lemma13() {
  int trials = 0, violations = 0, witnesses = 0, multi = 0;
  for (std::uint64_t seed = 0; trials < kLemma13Trials; ++seed) {
    // Mixed prerequisites and cyclic components make multi-literal minimal
    // witnesses possible.
    TheoryProfile profile;
    profile.fragment = seed % 4 ? FragmentTag::NMU : FragmentTag::NU;
    profile.letters = 2 + seed % 5;
    profile.rules = 4 + seed % 11;
    profile.tightness = profile.letters - seed % 2 * (profile.letters / 2);
    profile.seed = 9000 + seed;
    DefaultTheory t = random_theory(profile);
    if (t.facts().size() < 2) continue;
    ++trials;
    BruteForce brute(t);
    DependencyGraph graph = build_graph(t);
    SccDecomposition sccs = decompose(graph);
    for (const auto& L : subsets(t.facts(), 1, 2)) {
      for (const auto& S : brute.minimal_strong_witnesses(L)) {
        ++witnesses;
        multi += S.size() > 1;
        std::size_t first = sccs.component_of[graph.find(S[0].letter)];
        for (const auto& l : S) violations += sccs.component_of[graph.find(l.letter)] != first;
      }
    }
  }
  return {violations == 0, std::to_string(trials) + " theories, every L with |L| <= 2, " +
                               std::to_string(witnesses) + " minimal witnesses (" +
                               std::to_string(multi) + " with several literals), " +
                               std::to_string(violations) + " violations"};
}

// ---- 7 ----------------------------------------------------------------

Verdict semi_monotonicity() {
  int trials = 0, incoherent = 0, lost = 0, extensions_checked = 0;
  for (std::uint64_t seed = 0; trials < kSemiMonotonicTrials; ++seed) {
    TheoryProfile profile;
    profile.fragment = FragmentTag::DF;
    profile.normal = true;
    profile.letters = 2 + seed % 6;
    profile.rules = 1 + seed % 8;
    profile.tightness = 1 + seed % 2;
    profile.seed = 11000 + seed;
    DefaultTheory t = random_theory(profile);
    profile.seed = 51000 + seed;
    profile.rules = 1 + seed % 4;
    DefaultTheory more = random_theory(profile);
    DefaultTheory bigger = t;
    for (const auto& r : more.defaults()) bigger.add_default(r);
    ++trials;
    auto small = extensions(t);
    auto large = extensions(bigger);
    incoherent += small.empty() || large.empty();
    for (const auto& e : small) {
      ++extensions_checked;
      bool kept = std::any_of(large.begin(), large.end(), [&](const SignatureSet& f) {
        return e.literals.is_subset_of(f.literals);
      });
      lost += !kept;
    }
  }
  return {incoherent == 0 && lost == 0,
          std::to_string(trials) + " trials, " + std::to_string(extensions_checked) +
              " extensions, " + std::to_string(incoherent) + " incoherent, " +
              std::to_string(lost) + " without a containing extension"};
}

// ---- 8 ----------------------------------------------------------------

double time_enumeration(std::size_t letters, std::size_t rules, std::size_t* outliers) {
  TheoryProfile profile;
  profile.fragment = FragmentTag::NU;
  profile.letters = letters;
  profile.rules = rules;
  profile.tightness = 1;
  profile.seed = 8;
  DefaultTheory t = random_theory(profile);
  DetectorOptions options;
  options.backend = Backend::fast;
  double best = 1e300;
  for (int i = 0; i < kPerfRepeats; ++i) {
    auto start = Clock::now();
    OutlierDetector detector(t, options);
    *outliers = detector.enumerate_strong(1).reports.size();
    best = std::min(best, seconds_since(start));
  }
  return best;
}

Verdict performance() {
  std::size_t small_outliers = 0, large_outliers = 0;
  double base = time_enumeration(kPerfLetters, kPerfRules, &small_outliers);
  double doubled = time_enumeration(2 * kPerfLetters, 2 * kPerfRules, &large_outliers);
  double ratio = doubled / std::max(base, 1e-9);
  char buffer[256];
  std::snprintf(buffer, sizeof buffer,
                "n=%zu: %.3f s (%zu outliers), n=%zu: %.3f s (%zu outliers), ratio %.2f "
                "(limits %.0f s, %.0f)",
                kPerfLetters, base, small_outliers, 2 * kPerfLetters, doubled, large_outliers,
                ratio, kPerfSeconds, kPerfMaxRatio);
  return {base < kPerfSeconds && ratio <= kPerfMaxRatio, buffer};
}

}  // namespace

int main() {
  report(1, "golden scenarios", golden);
  report(2, "fast and exhaustive entailment agree", backend_equivalence);
  report(3, "strong enumeration matches brute force", enumeration_vs_brute_force);
  report(4, "reduction equivalences", reductions);
  report(5, "incremental lemma monotonicity", incremental_lemma);
  report(6, "minimal strong witnesses inside one component", lemma13);
  report(7, "semi-monotonicity and coherence", semi_monotonicity);
  report(8, "polynomial-path performance", performance);
  return failures;
}
