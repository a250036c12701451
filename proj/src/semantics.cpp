#include "dlout/semantics.hpp"

#include <deque>
#include <map>

#include "dlout/errors.hpp"

namespace dlout {

namespace {

void require_nmu(const DefaultTheory& theory, const char* operation) {
  if (!is_nmu(theory)) {
    throw ScopeError(std::string(operation) + " requires a normal mixed unary theory");
  }
}

}  // namespace

std::string_view to_string(Backend backend) {
  return backend == Backend::fast ? "fast" : "exhaustive";
}

Backend default_backend(const DefaultTheory& theory) {
  return classify(theory).is_unary() ? Backend::fast : Backend::exhaustive;
}

std::optional<Proof> find_proof(const DefaultTheory& theory, const Literal& literal,
                                const LiteralSet& context) {
  require_nmu(theory, "find_proof");
  if (theory.facts().contains(literal)) return Proof{literal, InFacts{}};

  // Breadth-first over literals derivable by rule chains; each derived
  // literal must not be contradicted by the context.
  const auto& rules = theory.defaults();
  std::map<Literal, std::size_t> via;
  std::deque<Literal> queue;
  auto reach = [&](const Literal& from_rule_head, std::size_t rule) {
    if (context.contains(from_rule_head.negate()) || via.count(from_rule_head)) return;
    via.emplace(from_rule_head, rule);
    queue.push_back(from_rule_head);
  };
  for (std::size_t r = 0; r < rules.size(); ++r) {
    const auto& rule = rules[r];
    if (rule.is_prerequisite_free() || theory.facts().contains(rule.prerequisite()[0])) {
      reach(rule.consequent()[0], r);
    }
  }
  while (!queue.empty() && !via.count(literal)) {
    Literal current = queue.front();
    queue.pop_front();
    for (std::size_t r = 0; r < rules.size(); ++r) {
      const auto& rule = rules[r];
      if (!rule.is_prerequisite_free() && rule.prerequisite()[0] == current) {
        reach(rule.consequent()[0], r);
      }
    }
  }
  auto it = via.find(literal);
  if (it == via.end()) return std::nullopt;

  std::vector<std::size_t> chain;
  std::size_t r = it->second;
  while (true) {
    chain.push_back(r);
    const auto& rule = rules[r];
    if (rule.is_prerequisite_free() || theory.facts().contains(rule.prerequisite()[0])) break;
    r = via.at(rule.prerequisite()[0]);
  }
  return Proof{literal, std::vector<std::size_t>(chain.rbegin(), chain.rend())};
}

bool is_extension(const DefaultTheory& theory, const LiteralSet& candidate) {
  require_nmu(theory, "is_extension");
  if (!theory.facts().is_consistent()) {
    throw ScopeError("is_extension requires consistent facts");
  }
  if (!candidate.is_consistent()) return false;
  if (!theory.facts().is_subset_of(candidate)) return false;
  for (const auto& rule : theory.defaults()) {
    const Literal& x = rule.consequent()[0];
    bool prerequisite_absent =
        !rule.is_prerequisite_free() && !candidate.contains(rule.prerequisite()[0]);
    if (!prerequisite_absent && !candidate.contains(x.negate()) && !candidate.contains(x)) {
      return false;
    }
  }
  for (const auto& l : candidate) {
    if (!find_proof(theory, l, candidate)) return false;
  }
  return true;
}

Reasoner::Reasoner(const DefaultTheory& theory, Backend backend, SearchBudget budget)
    : compiled_(theory), backend_(backend), budget_(budget) {
  if (backend_ != Backend::fast) return;
  Fragment fragment = classify(theory);
  if (fragment.tag == FragmentTag::NU) {
    unary_ = std::make_unique<UnaryReasoner>(compiled_);
  } else if (fragment.tag == FragmentTag::DNU) {
    dual_ = true;
    dual_compiled_ = std::make_unique<CompiledTheory>(dualize(theory));
    unary_ = std::make_unique<UnaryReasoner>(*dual_compiled_);
  } else {
    throw ScopeError("the fast backend requires an NU or DNU theory, got " +
                     std::string(to_string(fragment.tag)));
  }
}

Reasoner::~Reasoner() = default;

bool Reasoner::entails(const Facts& facts, LitCode goal) const {
  return entails_all(facts, std::span<const LitCode>(&goal, 1));
}

bool Reasoner::entails_all(const Facts& facts, std::span<const LitCode> goals) const {
  calls_.fetch_add(1, std::memory_order_relaxed);
  if (unary_) {
    Facts query = dual_ ? facts.negated() : facts;
    for (LitCode g : goals) {
      if (!unary_->skeptical(query, dual_ ? complement(g) : g)) return false;
    }
    return true;
  }
  bool all = true;
  for_each_extension(compiled_, facts, budget_, [&](const ExtensionView& view) {
    for (LitCode g : goals) {
      if (!view.contains(g)) {
        all = false;
        return false;
      }
    }
    return true;
  });
  return all;
}

bool Reasoner::brave(const Facts& facts, LitCode goal) const {
  calls_.fetch_add(1, std::memory_order_relaxed);
  if (unary_) {
    return dual_ ? unary_->brave(facts.negated(), complement(goal)) : unary_->brave(facts, goal);
  }
  bool found = false;
  for_each_extension(compiled_, facts, budget_, [&](const ExtensionView& view) {
    found = view.contains(goal);
    return !found;
  });
  return found;
}

bool entails(const DefaultTheory& theory, const LiteralSet& goal, Backend backend,
             const SearchBudget& budget) {
  Reasoner reasoner(theory, backend, budget);
  const CompiledTheory& compiled = reasoner.compiled();
  if (!compiled.facts_consistent()) return true;
  std::vector<LitCode> codes;
  for (const auto& l : goal) {
    auto code = compiled.encode(l);
    if (!code) {
      // A letter outside the theory is in no consistent extension; only an
      // incoherent theory entails it.
      return extensions(theory, budget).empty();
    }
    codes.push_back(*code);
  }
  return reasoner.entails_all(compiled.facts(), codes);
}

bool brave_member(const DefaultTheory& theory, const Literal& literal,
                  const SearchBudget& budget) {
  CompiledTheory compiled(theory);
  if (!compiled.facts_consistent()) return true;
  auto code = compiled.encode(literal);
  if (!code) return false;
  Reasoner reasoner(theory, Backend::exhaustive, budget);
  return reasoner.brave(compiled.facts(), *code);
}

}  // namespace dlout
