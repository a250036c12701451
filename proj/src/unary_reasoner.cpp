#include <vector>

#include "dlout/errors.hpp"
#include "dlout/semantics.hpp"

// Extensions of a normal unary theory are determined by their positive atoms
// A: W+ is in A, A avoids W-, every atom of A is derivable from W+ through
// positive rules whose heads lie in A, and every positive rule fired by A
// whose head is outside A is blocked by W- or by a negative rule fired by A.

namespace dlout {

UnaryReasoner::UnaryReasoner(const CompiledTheory& theory)
    : letters_(theory.letter_count()),
      positive_by_prereq_(letters_),
      positive_prereqs_of_(letters_),
      negative_by_prereq_(letters_),
      negative_free_(letters_, 0),
      negative_prereqs_of_(letters_) {
  for (const auto& rule : theory.rules()) {
    if (rule.consequent.size() != 1 || rule.justification != rule.consequent ||
        rule.prerequisite.size() > 1 ||
        (rule.prerequisite.size() == 1 && is_negative(rule.prerequisite[0]))) {
      throw ScopeError("fast backend requires a normal unary theory");
    }
    LitCode head = rule.consequent[0];
    LetterId b = letter_of(head);
    bool free = rule.prerequisite.empty();
    LetterId p = free ? 0 : letter_of(rule.prerequisite[0]);
    if (!is_negative(head)) {
      if (free) {
        positive_free_.push_back(b);
      } else {
        positive_by_prereq_[p].push_back(b);
      }
      positive_prereqs_of_[b].push_back(free ? -1 : static_cast<std::int64_t>(p));
    } else if (free) {
      negative_free_[b] = 1;
    } else {
      negative_by_prereq_[p].push_back(b);
      negative_prereqs_of_[b].push_back(p);
    }
  }
}

// Largest set of atoms derivable from W+ through positive rules, never
// entering W- or `forbidden`.
void UnaryReasoner::grounded(const Facts& facts, const std::vector<std::uint8_t>& forbidden,
                             std::vector<std::uint8_t>& in, std::vector<LetterId>& queue) const {
  in.assign(letters_, 0);
  queue.clear();
  auto reach = [&](LetterId b) {
    if (!in[b] && !forbidden[b] && facts.sign(b) >= 0) {
      in[b] = 1;
      queue.push_back(b);
    }
  };
  for (LetterId x = 0; x < letters_; ++x) {
    if (facts.sign(x) > 0) reach(x);
  }
  for (LetterId b : positive_free_) reach(b);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (LetterId b : positive_by_prereq_[queue[i]]) reach(b);
  }
}

bool UnaryReasoner::avoidable(const Facts& facts, std::vector<std::uint8_t> forbidden) const {
  for (LetterId x = 0; x < letters_; ++x) {
    if (forbidden[x] && facts.sign(x) > 0) return false;
  }
  std::vector<std::uint8_t> in;
  std::vector<std::uint8_t> suppressed(letters_);
  std::vector<LetterId> queue;
  while (true) {
    grounded(facts, forbidden, in, queue);
    suppressed = negative_free_;
    for (LetterId p : queue) {
      for (LetterId b : negative_by_prereq_[p]) suppressed[b] = 1;
    }
    // Every atom kept out must stay unfired unless a negative rule blocks
    // it; prerequisites that would fire it must go too.
    bool changed = false;
    for (LetterId b = 0; b < letters_; ++b) {
      if (!forbidden[b] || facts.sign(b) < 0 || suppressed[b]) continue;
      for (std::int64_t p : positive_prereqs_of_[b]) {
        if (p < 0) return false;
        if (in[p] && !forbidden[p]) {
          if (facts.sign(static_cast<LetterId>(p)) > 0) return false;
          forbidden[p] = 1;
          changed = true;
        }
      }
    }
    if (!changed) return true;
  }
}

bool UnaryReasoner::skeptical(const Facts& facts, LitCode goal) const {
  LetterId x = letter_of(goal);
  if (facts.contains(goal)) return true;
  if (facts.contains(complement(goal))) return false;
  std::vector<std::uint8_t> forbidden(letters_, 0);
  if (!is_negative(goal)) {
    forbidden[x] = 1;
    return !avoidable(facts, std::move(forbidden));
  }
  if (brave(facts, complement(goal))) return false;
  if (negative_free_[x]) return true;
  forbidden[x] = 1;
  for (LetterId p : negative_prereqs_of_[x]) forbidden[p] = 1;
  return !avoidable(facts, std::move(forbidden));
}

bool UnaryReasoner::brave(const Facts& facts, LitCode goal) const {
  LetterId x = letter_of(goal);
  if (facts.contains(goal)) return true;
  if (facts.contains(complement(goal))) return false;
  std::vector<std::uint8_t> forbidden(letters_, 0);
  std::vector<std::uint8_t> in;
  std::vector<LetterId> queue;
  if (!is_negative(goal)) {
    grounded(facts, forbidden, in, queue);
    return in[x] != 0;
  }
  if (negative_free_[x]) return true;
  forbidden[x] = 1;
  grounded(facts, forbidden, in, queue);
  for (LetterId p : negative_prereqs_of_[x]) {
    if (in[p]) return true;
  }
  return false;
}

}  // namespace dlout
