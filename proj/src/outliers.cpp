#include "dlout/outliers.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <functional>
#include <map>

#include "dlout/errors.hpp"

namespace dlout {

namespace {

// Calls visit(subset) for every subset of `pool` with min_size..max_size
// elements, smaller sizes first and lexicographic within a size. Stops when
// visit returns false.
bool for_each_subset(const std::vector<LitCode>& pool, std::size_t min_size,
                     std::size_t max_size,
                     const std::function<bool(const std::vector<LitCode>&)>& visit) {
  std::vector<LitCode> current;
  std::vector<std::size_t> index;
  max_size = std::min(max_size, pool.size());
  for (std::size_t size = std::max<std::size_t>(min_size, 1); size <= max_size; ++size) {
    index.resize(size);
    for (std::size_t i = 0; i < size; ++i) index[i] = i;
    while (true) {
      current.clear();
      for (std::size_t i : index) current.push_back(pool[i]);
      if (!visit(current)) return false;
      std::size_t pos = size;
      while (pos > 0 && index[pos - 1] == pool.size() - size + pos - 1) --pos;
      if (pos == 0) break;
      ++index[pos - 1];
      for (std::size_t i = pos; i < size; ++i) index[i] = index[i - 1] + 1;
    }
  }
  return true;
}

bool size_lex_codes(const std::vector<LitCode>& a, const std::vector<LitCode>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool overlaps(const std::vector<LitCode>& a, const std::vector<LitCode>& b) {
  for (LitCode x : a) {
    if (std::binary_search(b.begin(), b.end(), x)) return true;
  }
  return false;
}

DetectorOptions options_for(Backend backend, const SearchBudget& budget = {}) {
  DetectorOptions options;
  options.backend = backend;
  options.budget = budget;
  return options;
}

std::vector<LitCode> minus(const std::vector<LitCode>& a, const std::vector<LitCode>& b) {
  std::vector<LitCode> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

SearchStats& SearchStats::operator+=(const SearchStats& other) {
  witness_candidates += other.witness_candidates;
  pair_candidates += other.pair_candidates;
  entailment_calls += other.entailment_calls;
  return *this;
}

std::vector<LiteralSet> EnumerationResult::outliers() const {
  std::vector<LiteralSet> out;
  out.reserve(reports.size());
  for (const auto& r : reports) out.push_back(r.outlier);
  return out;
}

struct OutlierDetector::Hit {
  std::vector<LitCode> outlier;
  bool strong;
};

OutlierDetector::OutlierDetector(DefaultTheory theory, DetectorOptions options)
    : theory_(std::move(theory)), options_(options) {
  if (!theory_.facts().is_consistent()) {
    throw InvalidQuery("outlier detection requires a consistent set of facts");
  }
  Backend backend = options_.backend.value_or(default_backend(theory_));
  reasoner_ = std::make_unique<Reasoner>(theory_, backend, options_.budget);
  graph_ = build_graph(theory_);
  sccs_ = decompose(graph_);
  reach_ = std::make_unique<Reachability>(graph_);
  facts_ = reasoner_->compiled().facts();
  fact_codes_ = reasoner_->compiled().fact_codes();
}

OutlierDetector::~OutlierDetector() = default;

void OutlierDetector::validate(const LiteralSet& L, const LiteralSet* S) const {
  if (L.empty()) throw InvalidQuery("the outlier set must be nonempty");
  if (!L.is_subset_of(theory_.facts())) {
    throw InvalidQuery("the outlier set " + L.to_string() + " is not drawn from the facts");
  }
  if (S == nullptr) return;
  if (S->empty()) throw InvalidQuery("the witness set must be nonempty");
  if (!S->is_subset_of(theory_.facts())) {
    throw InvalidQuery("the witness set " + S->to_string() + " is not drawn from the facts");
  }
  if (L.intersects(*S)) throw InvalidQuery("the outlier and witness sets overlap");
}

void OutlierDetector::require_nmu(const char* operation) const {
  if (!is_nmu(theory_)) {
    throw ScopeError(std::string(operation) + " requires a normal mixed unary theory");
  }
}

std::vector<LitCode> OutlierDetector::codes(const LiteralSet& set) const {
  std::vector<LitCode> out;
  for (const auto& l : set) out.push_back(*reasoner_->compiled().encode(l));
  std::sort(out.begin(), out.end());
  return out;
}

Facts OutlierDetector::without(const std::vector<LitCode>& removed) const {
  Facts out = facts_;
  for (LitCode c : removed) out.remove(c);
  return out;
}

bool OutlierDetector::first_condition(const std::vector<LitCode>& S) const {
  std::vector<LitCode> negated;
  for (LitCode c : S) negated.push_back(complement(c));
  return reasoner_->entails_all(without(S), negated);
}

bool OutlierDetector::second_condition(const std::vector<LitCode>& S,
                                       const std::vector<LitCode>& L, bool strong) const {
  std::vector<LitCode> removed = S;
  removed.insert(removed.end(), L.begin(), L.end());
  Facts facts = without(removed);
  if (!strong) {
    std::vector<LitCode> negated;
    for (LitCode c : S) negated.push_back(complement(c));
    return !reasoner_->entails_all(facts, negated);
  }
  for (LitCode c : S) {
    if (reasoner_->entails(facts, complement(c))) return false;
  }
  return true;
}

// The status of a literal only depends on the facts whose letters reach its
// letter, so an outlier candidate must reach the witness letters it changes.
bool OutlierDetector::reaches(const std::vector<LitCode>& L, const std::vector<LitCode>& S,
                              bool every) const {
  for (LitCode s : S) {
    bool hit = std::any_of(L.begin(), L.end(), [&](LitCode l) {
      return reach_->reaches(letter_of(l), letter_of(s));
    });
    if (hit && !every) return true;
    if (!hit && every) return false;
  }
  return every;
}

bool OutlierDetector::is_witness(const LiteralSet& L, const LiteralSet& S) const {
  validate(L, &S);
  auto s = codes(S);
  return first_condition(s) && second_condition(s, codes(L), false);
}

bool OutlierDetector::is_strong_witness(const LiteralSet& L, const LiteralSet& S) const {
  validate(L, &S);
  auto s = codes(S);
  return first_condition(s) && second_condition(s, codes(L), true);
}

std::vector<std::vector<LitCode>> OutlierDetector::component_witness_candidates(
    const std::vector<LitCode>& exclude) const {
  std::vector<std::vector<LitCode>> out;
  for (const auto& component : sccs_.components) {
    std::vector<LitCode> pool;
    for (std::size_t v : component) {
      auto sign = facts_.sign(static_cast<LetterId>(v));
      if (sign == 0) continue;
      LitCode code = make_code(static_cast<LetterId>(v), sign < 0);
      if (!std::binary_search(exclude.begin(), exclude.end(), code)) pool.push_back(code);
    }
    for_each_subset(pool, 1, pool.size(), [&](const std::vector<LitCode>& s) {
      out.push_back(s);
      return true;
    });
  }
  return out;
}

std::vector<std::vector<LitCode>> OutlierDetector::bounded_witness_candidates(
    const std::vector<LitCode>& exclude, std::size_t h) const {
  std::vector<std::vector<LitCode>> out;
  for_each_subset(minus(fact_codes_, exclude), 1, h, [&](const std::vector<LitCode>& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

std::vector<OutlierDetector::Hit> OutlierDetector::scan(
    const std::vector<LitCode>& S, const std::vector<std::vector<LitCode>>& outliers,
    bool strong, SearchStats& stats) const {
  std::vector<Hit> hits;
  ++stats.witness_candidates;
  if (!first_condition(S)) return hits;
  for (const auto& L : outliers) {
    if (overlaps(L, S)) continue;
    if (options_.prune_by_influence && !reaches(L, S, strong)) continue;
    ++stats.pair_candidates;
    if (!second_condition(S, L, strong)) continue;
    hits.push_back({L, strong || second_condition(S, L, true)});
  }
  return hits;
}

EnumerationResult OutlierDetector::enumerate(
    const std::vector<std::vector<LitCode>>& witness_candidates, std::size_t k,
    bool strong) const {
  std::vector<std::vector<LitCode>> outliers;
  for_each_subset(fact_codes_, 1, k, [&](const std::vector<LitCode>& L) {
    outliers.push_back(L);
    return true;
  });

  const std::size_t count = witness_candidates.size();
  std::vector<std::vector<Hit>> hits(count);
  std::vector<SearchStats> stats(count);
  std::uint64_t calls_before = reasoner_->calls();

  if (options_.jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) {
      hits[i] = scan(witness_candidates[i], outliers, strong, stats[i]);
    }
  } else {
    int threads = options_.jobs > 0 ? options_.jobs : omp_get_max_threads();
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
      try {
        hits[i] = scan(witness_candidates[i], outliers, strong, stats[i]);
      } catch (...) {
#pragma omp critical(dlout_enumeration_error)
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
  }

  std::map<std::vector<LitCode>, OutlierReport, decltype(&size_lex_codes)> merged(
      &size_lex_codes);
  EnumerationResult result;
  const CompiledTheory& compiled = reasoner_->compiled();
  for (std::size_t i = 0; i < count; ++i) {
    result.stats += stats[i];
    for (const Hit& hit : hits[i]) {
      auto& report = merged[hit.outlier];
      report.strong = strong;
      report.witnesses.push_back(compiled.decode(witness_candidates[i]));
      report.witness_strong.push_back(hit.strong);
    }
  }
  result.stats.entailment_calls = reasoner_->calls() - calls_before;
  for (auto& [outlier, report] : merged) {
    report.outlier = compiled.decode(outlier);
    result.reports.push_back(std::move(report));
  }
  return result;
}

OutlierReport OutlierDetector::recognize(const LiteralSet& L,
                                         const std::vector<std::vector<LitCode>>& candidates,
                                         bool strong, bool all_witnesses) const {
  auto l = codes(L);
  OutlierReport report;
  report.outlier = L;
  report.strong = strong;
  std::uint64_t calls_before = reasoner_->calls();
  for (const auto& S : candidates) {
    ++report.stats.witness_candidates;
    if (options_.prune_by_influence && !reaches(l, S, strong)) continue;
    if (!first_condition(S)) continue;
    ++report.stats.pair_candidates;
    if (!second_condition(S, l, strong)) continue;
    report.witnesses.push_back(reasoner_->compiled().decode(S));
    report.witness_strong.push_back(strong || second_condition(S, l, true));
    if (!all_witnesses) break;
  }
  report.stats.entailment_calls = reasoner_->calls() - calls_before;
  return report;
}

OutlierReport OutlierDetector::recognize_strong(const LiteralSet& L, bool all_witnesses) const {
  require_nmu("recognize_strong");
  validate(L, nullptr);
  return recognize(L, component_witness_candidates(codes(L)), true, all_witnesses);
}

OutlierReport OutlierDetector::recognize_general(const LiteralSet& L, std::size_t h,
                                                 bool all_witnesses) const {
  require_nmu("recognize_general");
  validate(L, nullptr);
  return recognize(L, bounded_witness_candidates(codes(L), h), false, all_witnesses);
}

EnumerationResult OutlierDetector::enumerate_strong(std::size_t k) const {
  require_nmu("enumerate_strong");
  return enumerate(component_witness_candidates({}), k, true);
}

EnumerationResult OutlierDetector::enumerate_general(std::size_t k, std::size_t h) const {
  require_nmu("enumerate_general");
  return enumerate(bounded_witness_candidates({}, h), k, false);
}

std::vector<LiteralSet> OutlierDetector::minimal_strong_witnesses(const LiteralSet& L) const {
  require_nmu("minimal_strong_witnesses");
  validate(L, nullptr);
  auto l = codes(L);
  // Candidates come smallest first, so a set is minimal iff no earlier hit
  // is contained in it.
  std::vector<std::vector<LitCode>> found;
  for (const auto& S : component_witness_candidates(l)) {
    bool covered = std::any_of(found.begin(), found.end(), [&](const std::vector<LitCode>& f) {
      return std::includes(S.begin(), S.end(), f.begin(), f.end());
    });
    if (covered) continue;
    if (first_condition(S) && second_condition(S, l, true)) found.push_back(S);
  }
  std::sort(found.begin(), found.end(), size_lex_codes);
  std::vector<LiteralSet> out;
  for (const auto& S : found) out.push_back(reasoner_->compiled().decode(S));
  return out;
}

bool is_witness(const DefaultTheory& theory, const LiteralSet& L, const LiteralSet& S,
                Backend backend, const SearchBudget& budget) {
  return OutlierDetector(theory, options_for(backend, budget)).is_witness(L, S);
}

bool is_strong_witness(const DefaultTheory& theory, const LiteralSet& L, const LiteralSet& S,
                       Backend backend, const SearchBudget& budget) {
  return OutlierDetector(theory, options_for(backend, budget)).is_strong_witness(L, S);
}

OutlierReport recognize_strong(const DefaultTheory& theory, const LiteralSet& L,
                               Backend backend, bool all_witnesses) {
  return OutlierDetector(theory, options_for(backend)).recognize_strong(L, all_witnesses);
}

EnumerationResult enumerate_strong(const DefaultTheory& theory, std::size_t k,
                                   Backend backend) {
  return OutlierDetector(theory, options_for(backend)).enumerate_strong(k);
}

EnumerationResult enumerate_general(const DefaultTheory& theory, std::size_t k, std::size_t h,
                                    Backend backend) {
  return OutlierDetector(theory, options_for(backend)).enumerate_general(k, h);
}

std::vector<LiteralSet> minimal_strong_witnesses(const DefaultTheory& theory,
                                                 const LiteralSet& L, Backend backend) {
  return OutlierDetector(theory, options_for(backend)).minimal_strong_witnesses(L);
}

}  // namespace dlout
