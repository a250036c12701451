#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dlout/literal.hpp"
#include "dlout/theory.hpp"

namespace dlout {

// A 3CNF formula over x1..xn. A clause literal is +i or -i (i in 1..n).
struct Cnf3 {
  int variable_count = 0;
  std::vector<std::array<int, 3>> clauses;

  friend bool operator==(const Cnf3&, const Cnf3&) = default;
};

// DIMACS "p cnf n m" input. Clauses with one or two literals are padded by
// repeating their last literal; empty clauses and clauses with more than
// three literals are rejected with ParseError.
Cnf3 parse_dimacs(std::string_view text);
Cnf3 parse_dimacs(std::istream& in);
std::string to_dimacs(const Cnf3& phi);

// Name of variable i in generated theories: "x<i>".
std::string variable_letter(int i);

struct SatResult {
  bool satisfiable = false;
  // Truth values of x1..xn (index 0 is x1), when satisfiable.
  std::vector<bool> model;
  // The model as the literal set Lit(T).
  LiteralSet model_literals;
};

// Truth-table decision. Throws SizeGuardError above max_variables.
SatResult sat(const Cnf3& phi, int max_variables = 20);
bool evaluate(const Cnf3& phi, const std::vector<bool>& assignment);

enum class Construction { lemma4, thm8, thm9, thm10 };

std::string_view to_string(Construction construction);
// "lemma4", "thm8", "thm9" or "thm10"; throws std::invalid_argument.
Construction parse_construction(std::string_view name);

// Letters the constructions introduce. Names use the reserved prefixes
// _y, _c, _l and _f, so they never clash with x1..xn.
struct DesignatedLetters {
  std::optional<std::string> l;
  std::optional<std::string> f;
  std::optional<std::string> c0;
  std::vector<std::string> c;  // c1..cm
  std::vector<std::string> x;  // x1..xn
  std::vector<std::string> y;  // y1..yn
};

struct GeneratedTheory {
  DefaultTheory theory;
  DesignatedLetters designated;
  Construction construction;
};

GeneratedTheory build_lemma4(const Cnf3& phi);
GeneratedTheory build_thm8(const Cnf3& phi);
GeneratedTheory build_thm9(const Cnf3& phi);
GeneratedTheory build_thm10(const Cnf3& phi);
GeneratedTheory build(Construction construction, const Cnf3& phi);

// S(phi) = {x_i : the model sets x_i false}, the witness used for Lemma 4.
LiteralSet lemma4_witness(const std::vector<bool>& model);

// Uniform random 3CNF with the given shape.
Cnf3 random_cnf(int variable_count, int clause_count, std::uint64_t seed);

struct TheoryProfile {
  FragmentTag fragment = FragmentTag::NU;
  std::size_t letters = 6;  // n
  std::size_t rules = 8;    // m
  std::size_t tightness = 1;  // c
  std::uint64_t seed = 0;
  // DF profiles only: make every rule normal.
  bool normal = false;
};

// Seeded random theory whose classification is exactly profile.fragment and
// whose tightness is at most profile.tightness. Letters are a0..a(n-1),
// spread over layers of at most c letters; every edge goes from a layer to
// the same or a later one. Throws InfeasibleProfile.
DefaultTheory random_theory(const TheoryProfile& profile);

}  // namespace dlout
