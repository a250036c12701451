#include "dlout/theory.hpp"

#include <algorithm>

#include "dlout/errors.hpp"

namespace dlout {

namespace {

std::string conjunction(const LiteralSet& set) {
  std::string out;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i > 0) out += " & ";
    out += set[i].to_string();
  }
  return out;
}

bool single_literal_normal(const DefaultRule& rule) {
  return rule.is_normal() && rule.consequent().size() == 1 && rule.prerequisite().size() <= 1;
}

}  // namespace

DefaultRule::DefaultRule(LiteralSet prerequisite, LiteralSet justification,
                         LiteralSet consequent)
    : prerequisite_(std::move(prerequisite)),
      justification_(std::move(justification)),
      consequent_(std::move(consequent)) {
  if (justification_.empty()) throw InvalidRule("default rule has an empty justification");
  if (consequent_.empty()) throw InvalidRule("default rule has an empty consequent");
}

DefaultRule DefaultRule::normal(LiteralSet prerequisite, LiteralSet consequent) {
  LiteralSet justification = consequent;
  return DefaultRule(std::move(prerequisite), std::move(justification), std::move(consequent));
}

std::string DefaultRule::to_string() const {
  std::string out;
  if (!prerequisite_.empty()) out += conjunction(prerequisite_) + " ";
  out += ": " + conjunction(justification_) + " / " + conjunction(consequent_);
  return out;
}

DefaultTheory::DefaultTheory(std::vector<DefaultRule> defaults, LiteralSet facts)
    : facts_(std::move(facts)) {
  for (auto& rule : defaults) add_default(std::move(rule));
}

bool DefaultTheory::add_default(DefaultRule rule) {
  if (std::find(defaults_.begin(), defaults_.end(), rule) != defaults_.end()) return false;
  defaults_.push_back(std::move(rule));
  return true;
}

DefaultTheory DefaultTheory::with_facts(LiteralSet facts) const {
  DefaultTheory out = *this;
  out.facts_ = std::move(facts);
  return out;
}

std::vector<std::string> DefaultTheory::letters() const {
  std::vector<std::string> out = facts_.letters();
  for (const auto& rule : defaults_) {
    for (const LiteralSet* part :
         {&rule.prerequisite(), &rule.justification(), &rule.consequent()}) {
      for (const auto& l : *part) out.push_back(l.letter);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string_view to_string(FragmentTag tag) {
  switch (tag) {
    case FragmentTag::DF:
      return "DF";
    case FragmentTag::NMU:
      return "NMU";
    case FragmentTag::NU:
      return "NU";
    case FragmentTag::DNU:
      return "DNU";
  }
  return "DF";
}

bool is_nmu(const DefaultTheory& theory) {
  return std::all_of(theory.defaults().begin(), theory.defaults().end(), single_literal_normal);
}

bool is_nu(const DefaultTheory& theory) {
  return is_nmu(theory) &&
         std::all_of(theory.defaults().begin(), theory.defaults().end(), [](const auto& r) {
           return r.is_prerequisite_free() || r.prerequisite()[0].positive();
         });
}

bool is_dnu(const DefaultTheory& theory) {
  return is_nmu(theory) &&
         std::all_of(theory.defaults().begin(), theory.defaults().end(), [](const auto& r) {
           return r.is_prerequisite_free() || r.prerequisite()[0].negative;
         });
}

Fragment classify(const DefaultTheory& theory) {
  Fragment out;
  out.normal = std::all_of(theory.defaults().begin(), theory.defaults().end(),
                           [](const auto& r) { return r.is_normal(); });
  if (is_nu(theory)) {
    out.tag = FragmentTag::NU;
  } else if (is_dnu(theory)) {
    out.tag = FragmentTag::DNU;
  } else if (is_nmu(theory)) {
    out.tag = FragmentTag::NMU;
  } else {
    out.tag = FragmentTag::DF;
  }
  return out;
}

DefaultTheory dualize(const DefaultTheory& theory) {
  DefaultTheory out;
  for (const auto& rule : theory.defaults()) {
    out.add_default(DefaultRule(rule.prerequisite().negated(), rule.justification().negated(),
                                rule.consequent().negated()));
  }
  for (const auto& l : theory.facts()) out.add_fact(l.negate());
  return out;
}

std::string to_text(const DefaultTheory& theory) {
  std::string out;
  for (const auto& l : theory.facts()) out += "fact " + l.to_string() + ".\n";
  for (const auto& rule : theory.defaults()) out += "default " + rule.to_string() + ".\n";
  return out;
}

}  // namespace dlout
