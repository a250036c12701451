#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "dlout/literal.hpp"

namespace dlout {

// prerequisite : justification / consequent, each a conjunction of literals.
// An empty prerequisite means the rule is prerequisite-free.
class DefaultRule {
 public:
  // Throws InvalidRule when the justification or the consequent is empty.
  DefaultRule(LiteralSet prerequisite, LiteralSet justification, LiteralSet consequent);

  static DefaultRule normal(LiteralSet prerequisite, LiteralSet consequent);

  const LiteralSet& prerequisite() const { return prerequisite_; }
  const LiteralSet& justification() const { return justification_; }
  const LiteralSet& consequent() const { return consequent_; }

  bool is_normal() const { return justification_ == consequent_; }
  bool is_prerequisite_free() const { return prerequisite_.empty(); }

  // "a : b / b" (theory-file body without the keyword and terminator)
  std::string to_string() const;

  friend bool operator==(const DefaultRule&, const DefaultRule&) = default;
  friend std::strong_ordering operator<=>(const DefaultRule&, const DefaultRule&) = default;

 private:
  LiteralSet prerequisite_;
  LiteralSet justification_;
  LiteralSet consequent_;
};

// A disjunction-free default theory (D, W). Rules keep insertion order and
// duplicates are dropped.
class DefaultTheory {
 public:
  DefaultTheory() = default;
  DefaultTheory(std::vector<DefaultRule> defaults, LiteralSet facts);

  const std::vector<DefaultRule>& defaults() const { return defaults_; }
  const LiteralSet& facts() const { return facts_; }

  // Returns false if the rule was already present.
  bool add_default(DefaultRule rule);
  void add_fact(Literal literal) { facts_.insert(std::move(literal)); }

  // Same rules, different W.
  DefaultTheory with_facts(LiteralSet facts) const;

  // Every letter occurring in D or W, sorted.
  std::vector<std::string> letters() const;

  friend bool operator==(const DefaultTheory&, const DefaultTheory&) = default;

 private:
  std::vector<DefaultRule> defaults_;
  LiteralSet facts_;
};

enum class FragmentTag { DF, NMU, NU, DNU };

struct Fragment {
  FragmentTag tag = FragmentTag::DF;
  bool normal = false;

  bool is_nmu() const { return tag != FragmentTag::DF; }
  bool is_unary() const { return tag == FragmentTag::NU || tag == FragmentTag::DNU; }

  friend bool operator==(const Fragment&, const Fragment&) = default;
};

std::string_view to_string(FragmentTag tag);

// Normal mixed unary: every rule is p : x / x with p empty or one literal.
bool is_nmu(const DefaultTheory& theory);
// NMU with every prerequisite empty or positive.
bool is_nu(const DefaultTheory& theory);
// NMU with every prerequisite empty or negative.
bool is_dnu(const DefaultTheory& theory);

// Most specific fragment. A theory whose prerequisites are all empty is both
// NU and DNU; it is reported as NU.
Fragment classify(const DefaultTheory& theory);

// Replaces every literal occurrence in D and W by its negation.
DefaultTheory dualize(const DefaultTheory& theory);

// Theory-file text: facts first (one per line), then defaults in order.
std::string to_text(const DefaultTheory& theory);

}  // namespace dlout
