#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dlout/literal.hpp"
#include "dlout/theory.hpp"

namespace dlout {

using LetterId = std::uint32_t;
// 2 * letter + (negative ? 1 : 0)
using LitCode = std::uint32_t;

constexpr LitCode make_code(LetterId letter, bool negative) {
  return 2 * letter + (negative ? 1U : 0U);
}
constexpr LetterId letter_of(LitCode code) { return code >> 1; }
constexpr bool is_negative(LitCode code) { return (code & 1U) != 0; }
constexpr LitCode complement(LitCode code) { return code ^ 1U; }

// A consistent fact set over a fixed letter table: one sign per letter.
class Facts {
 public:
  Facts() = default;
  explicit Facts(std::size_t letter_count) : sign_(letter_count, 0) {}

  std::size_t letter_count() const { return sign_.size(); }
  // 0 absent, +1 positive literal present, -1 negative literal present.
  std::int8_t sign(LetterId letter) const { return sign_[letter]; }

  bool contains(LitCode code) const {
    return sign_[letter_of(code)] == (is_negative(code) ? -1 : 1);
  }
  void add(LitCode code) { sign_[letter_of(code)] = is_negative(code) ? -1 : 1; }
  void remove(LitCode code) {
    if (contains(code)) sign_[letter_of(code)] = 0;
  }
  Facts negated() const;

  friend bool operator==(const Facts&, const Facts&) = default;

 private:
  std::vector<std::int8_t> sign_;
};

struct CompiledRule {
  std::vector<LitCode> prerequisite;
  std::vector<LitCode> justification;
  std::vector<LitCode> consequent;
};

// Integer view of a theory. Letter ids follow DefaultTheory::letters(), so
// they coincide with the vertex indices of the dependency graph.
class CompiledTheory {
 public:
  explicit CompiledTheory(const DefaultTheory& theory);

  std::size_t letter_count() const { return names_.size(); }
  const std::string& letter_name(LetterId id) const { return names_[id]; }
  std::optional<LetterId> find_letter(std::string_view name) const;

  std::optional<LitCode> encode(const Literal& literal) const;
  Literal decode(LitCode code) const;
  LiteralSet decode(const std::vector<LitCode>& codes) const;

  const std::vector<CompiledRule>& rules() const { return rules_; }
  // Codes of W in ascending order.
  const std::vector<LitCode>& fact_codes() const { return fact_codes_; }
  bool facts_consistent() const { return facts_consistent_; }
  // Requires facts_consistent().
  Facts facts() const;
  Facts make_facts(const std::vector<LitCode>& codes) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, LetterId> index_;
  std::vector<CompiledRule> rules_;
  std::vector<LitCode> fact_codes_;
  bool facts_consistent_ = true;
};

}  // namespace dlout
