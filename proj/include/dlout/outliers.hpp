#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "dlout/depgraph.hpp"
#include "dlout/literal.hpp"
#include "dlout/semantics.hpp"
#include "dlout/theory.hpp"

namespace dlout {

struct SearchStats {
  // Witness candidates S tested against the first condition.
  std::uint64_t witness_candidates = 0;
  // (S, L) pairs tested against the second condition.
  std::uint64_t pair_candidates = 0;
  std::uint64_t entailment_calls = 0;

  SearchStats& operator+=(const SearchStats& other);
};

struct OutlierReport {
  LiteralSet outlier;
  // In candidate order (component, then size, then lexicographic).
  std::vector<LiteralSet> witnesses;
  // Per witness: does it also satisfy the strong conditions?
  std::vector<bool> witness_strong;
  // True when the report answers a strong-outlier question.
  bool strong = false;
  SearchStats stats;

  bool is_outlier() const { return !witnesses.empty(); }
};

struct EnumerationResult {
  // Sorted by outlier, smaller sets first.
  std::vector<OutlierReport> reports;
  SearchStats stats;

  std::vector<LiteralSet> outliers() const;
};

struct DetectorOptions {
  // Defaults to fast for NU/DNU theories, exhaustive otherwise.
  std::optional<Backend> backend;
  SearchBudget budget;
  // Worker threads for enumeration: 0 uses the OpenMP default, 1 runs the
  // serial reference loop.
  int jobs = 0;
  // Skip outlier candidates that cannot reach the witness letters.
  bool prune_by_influence = true;
};

class OutlierDetector {
 public:
  // Throws InvalidQuery when W is inconsistent.
  explicit OutlierDetector(DefaultTheory theory, DetectorOptions options = {});
  ~OutlierDetector();

  const DefaultTheory& theory() const { return theory_; }
  Backend backend() const { return reasoner_->backend(); }
  const SccDecomposition& components() const { return sccs_; }
  const DependencyGraph& graph() const { return graph_; }
  std::uint64_t entailment_calls() const { return reasoner_->calls(); }

  bool is_witness(const LiteralSet& L, const LiteralSet& S) const;
  bool is_strong_witness(const LiteralSet& L, const LiteralSet& S) const;

  // Looks for strong witnesses among subsets of single components.
  OutlierReport recognize_strong(const LiteralSet& L, bool all_witnesses = false) const;
  // Looks for general witnesses with at most h literals.
  OutlierReport recognize_general(const LiteralSet& L, std::size_t h,
                                  bool all_witnesses = false) const;

  EnumerationResult enumerate_strong(std::size_t k) const;
  EnumerationResult enumerate_general(std::size_t k, std::size_t h) const;

  std::vector<LiteralSet> minimal_strong_witnesses(const LiteralSet& L) const;

 private:
  struct Hit;

  void validate(const LiteralSet& L, const LiteralSet* S) const;
  void require_nmu(const char* operation) const;
  std::vector<LitCode> codes(const LiteralSet& set) const;
  Facts without(const std::vector<LitCode>& removed) const;
  bool first_condition(const std::vector<LitCode>& S) const;
  bool second_condition(const std::vector<LitCode>& S, const std::vector<LitCode>& L,
                        bool strong) const;
  bool reaches(const std::vector<LitCode>& L, const std::vector<LitCode>& S, bool every) const;

  std::vector<std::vector<LitCode>> component_witness_candidates(
      const std::vector<LitCode>& exclude) const;
  std::vector<std::vector<LitCode>> bounded_witness_candidates(
      const std::vector<LitCode>& exclude, std::size_t h) const;
  std::vector<Hit> scan(const std::vector<LitCode>& S,
                        const std::vector<std::vector<LitCode>>& outliers, bool strong,
                        SearchStats& stats) const;
  EnumerationResult enumerate(const std::vector<std::vector<LitCode>>& witness_candidates,
                              std::size_t k, bool strong) const;
  OutlierReport recognize(const LiteralSet& L,
                          const std::vector<std::vector<LitCode>>& candidates, bool strong,
                          bool all_witnesses) const;

  DefaultTheory theory_;
  DetectorOptions options_;
  std::unique_ptr<Reasoner> reasoner_;
  DependencyGraph graph_;
  SccDecomposition sccs_;
  std::unique_ptr<Reachability> reach_;
  Facts facts_;
  std::vector<LitCode> fact_codes_;
};

bool is_witness(const DefaultTheory& theory, const LiteralSet& L, const LiteralSet& S,
                Backend backend, const SearchBudget& budget = {});
bool is_strong_witness(const DefaultTheory& theory, const LiteralSet& L, const LiteralSet& S,
                       Backend backend, const SearchBudget& budget = {});
OutlierReport recognize_strong(const DefaultTheory& theory, const LiteralSet& L,
                               Backend backend, bool all_witnesses = false);
EnumerationResult enumerate_strong(const DefaultTheory& theory, std::size_t k, Backend backend);
EnumerationResult enumerate_general(const DefaultTheory& theory, std::size_t k, std::size_t h,
                                    Backend backend);
std::vector<LiteralSet> minimal_strong_witnesses(const DefaultTheory& theory,
                                                 const LiteralSet& L, Backend backend);

}  // namespace dlout
