#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "dlout/compiled.hpp"
#include "dlout/literal.hpp"
#include "dlout/theory.hpp"

namespace dlout {

// Node cap for the exhaustive extension search.
struct SearchBudget {
  std::uint64_t max_nodes = 1'000'000;
};

// The finite literal set E_n whose closure is an extension, with the rule
// indices (into theory.defaults()) that generated it, in application order.
struct SignatureSet {
  LiteralSet literals;
  std::vector<std::size_t> generating;
  // Set only for the single extension of a theory with inconsistent W.
  bool inconsistent = false;

  // Membership in the deductive closure. An inconsistent extension holds
  // every literal.
  bool contains(const Literal& literal) const {
    return inconsistent || literals.contains(literal);
  }
};

// All distinct extensions, sorted by literal set. Empty iff the theory is
// incoherent. Throws BudgetExceeded.
std::vector<SignatureSet> extensions(const DefaultTheory& theory,
                                     const SearchBudget& budget = {});

// Extension check through proofs and default satisfaction. NMU theories with
// consistent W only (ScopeError otherwise).
bool is_extension(const DefaultTheory& theory, const LiteralSet& candidate);

struct InFacts {};

// Either the literal is a fact, or a chain of rules whose last consequent is
// the literal.
struct Proof {
  Literal target;
  std::variant<InFacts, std::vector<std::size_t>> steps;

  bool in_facts() const { return std::holds_alternative<InFacts>(steps); }
  const std::vector<std::size_t>& rules() const { return std::get<1>(steps); }
};

// Shortest proof of `literal` w.r.t. the theory and a context set, or nullopt.
// NMU only.
std::optional<Proof> find_proof(const DefaultTheory& theory, const Literal& literal,
                                const LiteralSet& context);

enum class Backend { exhaustive, fast };

std::string_view to_string(Backend backend);
// fast for NU/DNU theories, exhaustive otherwise.
Backend default_backend(const DefaultTheory& theory);

// Skeptical entailment of every goal literal. Incoherent theories and theories
// with inconsistent W entail everything. The fast backend requires an NU or
// DNU theory (ScopeError otherwise).
bool entails(const DefaultTheory& theory, const LiteralSet& goal, Backend backend,
             const SearchBudget& budget = {});

// Is the literal in some extension?
bool brave_member(const DefaultTheory& theory, const Literal& literal,
                  const SearchBudget& budget = {});

// Read-only view handed to extension visitors. `members` is indexed by LitCode.
struct ExtensionView {
  std::span<const std::uint8_t> members;
  std::span<const std::size_t> generating;

  bool contains(LitCode code) const { return members[code] != 0; }
};

// Depth-first enumeration of the extensions of (D, facts). The visitor
// returns false to stop early. Duplicates may be reported. Returns false if
// stopped by the visitor.
bool for_each_extension(const CompiledTheory& theory, const Facts& facts,
                        const SearchBudget& budget,
                        const std::function<bool(const ExtensionView&)>& visit);

// Polynomial skeptical/brave reasoning for normal unary theories (positive or
// empty prerequisites).
class UnaryReasoner {
 public:
  // Requires every rule of `theory` to be NU-shaped.
  explicit UnaryReasoner(const CompiledTheory& theory);

  bool skeptical(const Facts& facts, LitCode goal) const;
  bool brave(const Facts& facts, LitCode goal) const;

 private:
  // Is there an extension whose positive atoms avoid `forbidden`?
  bool avoidable(const Facts& facts, std::vector<std::uint8_t> forbidden) const;
  void grounded(const Facts& facts, const std::vector<std::uint8_t>& forbidden,
                std::vector<std::uint8_t>& in, std::vector<LetterId>& queue) const;

  std::size_t letters_;
  // Positive rules p : b / b, indexed by prerequisite; free ones separately.
  std::vector<std::vector<LetterId>> positive_by_prereq_;
  std::vector<LetterId> positive_free_;
  // Prerequisites of the positive rules concluding each atom; -1 for free.
  std::vector<std::vector<std::int64_t>> positive_prereqs_of_;
  // Negative rules p : -b / -b.
  std::vector<std::vector<LetterId>> negative_by_prereq_;
  std::vector<std::uint8_t> negative_free_;
  std::vector<std::vector<LetterId>> negative_prereqs_of_;
};

// Entailment engine over a fixed rule set with per-query fact sets. Safe to
// share between threads.
class Reasoner {
 public:
  Reasoner(const DefaultTheory& theory, Backend backend, SearchBudget budget = {});
  ~Reasoner();

  Backend backend() const { return backend_; }
  const CompiledTheory& compiled() const { return compiled_; }

  bool entails(const Facts& facts, LitCode goal) const;
  bool entails_all(const Facts& facts, std::span<const LitCode> goals) const;
  bool brave(const Facts& facts, LitCode goal) const;

  std::uint64_t calls() const { return calls_.load(std::memory_order_relaxed); }

 private:
  CompiledTheory compiled_;
  Backend backend_;
  SearchBudget budget_;
  // DNU theories are answered on their NU dual.
  bool dual_ = false;
  std::unique_ptr<CompiledTheory> dual_compiled_;
  std::unique_ptr<UnaryReasoner> unary_;
  mutable std::atomic<std::uint64_t> calls_{0};
};

}  // namespace dlout
