#include <cstdlib>
#include <stdexcept>

#include "dlout/oracles.hpp"

namespace dlout {

namespace {

Literal pos(const std::string& letter) { return Literal(letter); }
Literal neg(const std::string& letter) { return Literal(letter, true); }

void rule(DefaultTheory& theory, std::optional<Literal> prerequisite, const Literal& consequent) {
  LiteralSet pre;
  if (prerequisite) pre.insert(*prerequisite);
  theory.add_default(DefaultRule::normal(std::move(pre), LiteralSet{consequent}));
}

DesignatedLetters letters_for(const Cnf3& phi, bool with_y) {
  DesignatedLetters d;
  for (int i = 1; i <= phi.variable_count; ++i) {
    d.x.push_back(variable_letter(i));
    if (with_y) d.y.push_back("_y" + std::to_string(i));
  }
  for (std::size_t j = 1; j <= phi.clauses.size(); ++j) d.c.push_back("_c" + std::to_string(j));
  return d;
}

// x_i -> x_i, -x_i -> y_i
const std::string& sigma(const DesignatedLetters& d, int t) {
  std::size_t i = static_cast<std::size_t>(std::abs(t) - 1);
  return t > 0 ? d.x[i] : d.y[i];
}

}  // namespace

std::string_view to_string(Construction construction) {
  switch (construction) {
    case Construction::lemma4:
      return "lemma4";
    case Construction::thm8:
      return "thm8";
    case Construction::thm9:
      return "thm9";
    case Construction::thm10:
      return "thm10";
  }
  return "?";
}

Construction parse_construction(std::string_view name) {
  for (auto c : {Construction::lemma4, Construction::thm8, Construction::thm9,
                 Construction::thm10}) {
    if (to_string(c) == name) return c;
  }
  throw std::invalid_argument("unknown construction '" + std::string(name) +
                              "'; expected lemma4, thm8, thm9 or thm10");
}

GeneratedTheory build_lemma4(const Cnf3& phi) {
  GeneratedTheory out{{}, letters_for(phi, true), Construction::lemma4};
  const auto& d = out.designated;
  DefaultTheory& theory = out.theory;
  for (std::size_t i = 0; i < d.x.size(); ++i) {
    rule(theory, pos(d.x[i]), neg(d.y[i]));
    rule(theory, std::nullopt, pos(d.y[i]));
  }
  for (std::size_t j = 0; j < phi.clauses.size(); ++j) {
    for (int t : phi.clauses[j]) rule(theory, pos(sigma(d, t)), neg(d.c[j]));
  }
  for (const auto& x : d.x) rule(theory, std::nullopt, neg(x));
  for (const auto& x : d.x) theory.add_fact(pos(x));
  return out;
}

GeneratedTheory build_thm8(const Cnf3& phi) {
  GeneratedTheory out = build_lemma4(phi);
  out.construction = Construction::thm8;
  auto& d = out.designated;
  d.l = "_l";
  d.c0 = "_c0";
  DefaultTheory& theory = out.theory;
  for (std::size_t i = 0; i < d.x.size(); ++i) {
    rule(theory, pos(d.x[i]), neg(*d.c0));
    rule(theory, pos(d.y[i]), neg(*d.c0));
  }
  for (const auto& c : d.c) rule(theory, pos(c), pos(*d.c0));
  rule(theory, std::nullopt, pos(*d.l));
  rule(theory, pos(*d.l), pos(*d.c0));
  theory.add_fact(neg(*d.l));
  theory.add_fact(pos(*d.c0));
  for (const auto& c : d.c) theory.add_fact(pos(c));
  return out;
}

GeneratedTheory build_thm9(const Cnf3& phi) {
  GeneratedTheory out = build_lemma4(phi);
  out.construction = Construction::thm9;
  auto& d = out.designated;
  d.l = "_l";
  d.f = "_f";
  DefaultTheory& theory = out.theory;
  for (const auto& x : d.x) rule(theory, pos(*d.f), pos(x));
  for (const auto& c : d.c) {
    rule(theory, pos(c), pos(*d.f));
    rule(theory, pos(*d.f), pos(c));
  }
  rule(theory, std::nullopt, pos(*d.l));
  rule(theory, pos(*d.l), pos(*d.f));
  theory.add_fact(neg(*d.l));
  for (const auto& c : d.c) theory.add_fact(pos(c));
  return out;
}

GeneratedTheory build_thm10(const Cnf3& phi) {
  GeneratedTheory out{{}, letters_for(phi, false), Construction::thm10};
  auto& d = out.designated;
  d.l = "_l";
  DefaultTheory& theory = out.theory;
  for (const auto& x : d.x) {
    rule(theory, std::nullopt, pos(x));
    rule(theory, std::nullopt, neg(x));
  }
  for (std::size_t k = 0; k < phi.clauses.size(); ++k) {
    for (int t : phi.clauses[k]) {
      const std::string& x = d.x[static_cast<std::size_t>(std::abs(t) - 1)];
      rule(theory, t > 0 ? pos(x) : neg(x), pos(d.c[k]));
    }
  }
  for (const auto& c : d.c) {
    rule(theory, std::nullopt, neg(c));
    rule(theory, neg(c), pos(*d.l));
  }
  return out;
}

GeneratedTheory build(Construction construction, const Cnf3& phi) {
  switch (construction) {
    case Construction::lemma4:
      return build_lemma4(phi);
    case Construction::thm8:
      return build_thm8(phi);
    case Construction::thm9:
      return build_thm9(phi);
    case Construction::thm10:
      return build_thm10(phi);
  }
  throw std::invalid_argument("unknown construction");
}

LiteralSet lemma4_witness(const std::vector<bool>& model) {
  LiteralSet out;
  for (std::size_t i = 0; i < model.size(); ++i) {
    if (!model[i]) out.insert(pos(variable_letter(static_cast<int>(i) + 1)));
  }
  return out;
}

}  // namespace dlout
