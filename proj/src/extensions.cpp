#include <algorithm>
#include <cstdint>
#include <vector>

#include "dlout/errors.hpp"
#include "dlout/semantics.hpp"

namespace dlout {

namespace {

enum class Status : std::uint8_t { open, applied, blocked, idle };

// Depth-first search over rule applications. Each applicable rule is either
// applied or blocked for good; a blocked rule must end up with a contradicted
// justification. An extension that keeps the rule applicable contains its
// consequent and is reached through the apply branch instead, so every
// extension is found once.
class ExtensionSearch {
 public:
  ExtensionSearch(const CompiledTheory& theory, const Facts& facts, const SearchBudget& budget,
                  const std::function<bool(const ExtensionView&)>& visit)
      : rules_(theory.rules()),
        budget_(budget),
        visit_(visit),
        members_(2 * theory.letter_count(), 0),
        status_(rules_.size(), Status::open),
        dead_(rules_.size(), 0),
        producers_(2 * theory.letter_count()) {
    for (LetterId x = 0; x < facts.letter_count(); ++x) {
      if (facts.sign(x) != 0) members_[make_code(x, facts.sign(x) < 0)] = 1;
    }
    for (std::size_t r = 0; r < rules_.size(); ++r) {
      const auto& just = rules_[r].justification;
      for (LitCode j : just) {
        if (std::find(just.begin(), just.end(), complement(j)) != just.end()) dead_[r] = 1;
      }
      for (LitCode c : rules_[r].consequent) producers_[c].push_back(r);
    }
  }

  bool run() { return descend(); }

 private:
  bool contradicted(std::size_t r) const {
    for (LitCode j : rules_[r].justification) {
      if (members_[complement(j)]) return true;
    }
    return false;
  }

  bool holds_all(const std::vector<LitCode>& codes) const {
    for (LitCode c : codes) {
      if (!members_[c]) return false;
    }
    return true;
  }

  bool applicable(std::size_t r) const {
    return !dead_[r] && holds_all(rules_[r].prerequisite) && !contradicted(r);
  }

  // Could some undecided rule still add `code`?
  bool producible(LitCode code) const {
    for (std::size_t r : producers_[code]) {
      if (status_[r] == Status::open && !dead_[r] && !contradicted(r)) return true;
    }
    return false;
  }

  // A blocked rule whose justification is not yet contradicted, and that no
  // undecided rule can contradict, dooms the branch.
  bool blocked_hopeless() const {
    for (std::size_t r : blocked_) {
      if (contradicted(r)) continue;
      const auto& just = rules_[r].justification;
      bool hope = std::any_of(just.begin(), just.end(),
                              [&](LitCode j) { return producible(complement(j)); });
      if (!hope) return true;
    }
    return false;
  }

  // Adds the consequent of r; false when the result is inconsistent or
  // contradicts an applied justification.
  bool apply(std::size_t r) {
    for (LitCode c : rules_[r].consequent) {
      if (members_[c]) continue;
      if (members_[complement(c)]) return false;
      members_[c] = 1;
      trail_.push_back(c);
    }
    for (std::size_t a : applied_) {
      if (contradicted(a)) return false;
    }
    return true;
  }

  void count_node() {
    if (++nodes_ > budget_.max_nodes) throw BudgetExceeded(budget_.max_nodes);
  }

  bool leaf() {
    for (std::size_t r : blocked_) {
      if (!contradicted(r)) return true;
    }
    std::vector<std::size_t> generating = applied_;
    for (std::size_t r = 0; r < rules_.size(); ++r) {
      if (status_[r] != Status::applied && status_[r] != Status::open && applicable(r)) {
        generating.push_back(r);
      }
    }
    return visit_(ExtensionView{members_, generating});
  }

  bool descend() {
    count_node();
    std::size_t next = rules_.size();
    for (std::size_t r = 0; r < rules_.size(); ++r) {
      if (status_[r] != Status::open || !applicable(r)) continue;
      if (holds_all(rules_[r].consequent)) {
        // Nothing to add: applying or not yields the same set.
        status_[r] = Status::idle;
        idle_.push_back(r);
        continue;
      }
      next = r;
      break;
    }
    if (next == rules_.size()) return leaf();

    std::size_t mark = trail_.size();

    status_[next] = Status::applied;
    applied_.push_back(next);
    bool keep_going = true;
    if (apply(next) && !blocked_hopeless()) keep_going = descend_restoring();
    applied_.pop_back();
    undo(mark);
    if (!keep_going) {
      status_[next] = Status::open;
      return false;
    }

    status_[next] = Status::blocked;
    blocked_.push_back(next);
    if (!blocked_hopeless()) keep_going = descend_restoring();
    blocked_.pop_back();
    status_[next] = Status::open;
    return keep_going;
  }

  // Runs descend() and restores the idle marks it made.
  bool descend_restoring() {
    std::size_t mark = idle_.size();
    bool keep_going = descend();
    while (idle_.size() > mark) {
      status_[idle_.back()] = Status::open;
      idle_.pop_back();
    }
    return keep_going;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      members_[trail_.back()] = 0;
      trail_.pop_back();
    }
  }

  const std::vector<CompiledRule>& rules_;
  SearchBudget budget_;
  const std::function<bool(const ExtensionView&)>& visit_;
  std::vector<std::uint8_t> members_;
  std::vector<Status> status_;
  std::vector<std::uint8_t> dead_;
  std::vector<std::vector<std::size_t>> producers_;
  std::vector<std::size_t> applied_;
  std::vector<std::size_t> blocked_;
  std::vector<std::size_t> idle_;
  std::vector<LitCode> trail_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

bool for_each_extension(const CompiledTheory& theory, const Facts& facts,
                        const SearchBudget& budget,
                        const std::function<bool(const ExtensionView&)>& visit) {
  ExtensionSearch search(theory, facts, budget, visit);
  return search.run();
}

std::vector<SignatureSet> extensions(const DefaultTheory& theory, const SearchBudget& budget) {
  CompiledTheory compiled(theory);
  if (!compiled.facts_consistent()) {
    SignatureSet marker;
    marker.literals = theory.facts();
    marker.inconsistent = true;
    return {marker};
  }
  std::vector<SignatureSet> out;
  for_each_extension(compiled, compiled.facts(), budget, [&](const ExtensionView& view) {
    std::vector<LitCode> codes;
    for (LitCode c = 0; c < view.members.size(); ++c) {
      if (view.contains(c)) codes.push_back(c);
    }
    SignatureSet set;
    set.literals = compiled.decode(codes);
    set.generating.assign(view.generating.begin(), view.generating.end());
    out.push_back(std::move(set));
    return true;
  });
  std::stable_sort(out.begin(), out.end(), [](const SignatureSet& a, const SignatureSet& b) {
    return a.literals < b.literals;
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const SignatureSet& a, const SignatureSet& b) {
                          return a.literals == b.literals;
                        }),
            out.end());
  return out;
}

}  // namespace dlout
