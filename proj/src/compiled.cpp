#include "dlout/compiled.hpp"

#include <algorithm>

namespace dlout {

Facts Facts::negated() const {
  Facts out = *this;
  for (auto& s : out.sign_) s = static_cast<std::int8_t>(-s);
  return out;
}

CompiledTheory::CompiledTheory(const DefaultTheory& theory) : names_(theory.letters()) {
  index_.reserve(names_.size());
  for (LetterId i = 0; i < names_.size(); ++i) index_.emplace(names_[i], i);

  auto codes = [this](const LiteralSet& set) {
    std::vector<LitCode> out;
    out.reserve(set.size());
    for (const auto& l : set) out.push_back(*encode(l));
    return out;
  };
  rules_.reserve(theory.defaults().size());
  for (const auto& rule : theory.defaults()) {
    rules_.push_back({codes(rule.prerequisite()), codes(rule.justification()),
                      codes(rule.consequent())});
  }
  fact_codes_ = codes(theory.facts());
  std::sort(fact_codes_.begin(), fact_codes_.end());
  facts_consistent_ = theory.facts().is_consistent();
}

std::optional<LetterId> CompiledTheory::find_letter(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<LitCode> CompiledTheory::encode(const Literal& literal) const {
  auto id = find_letter(literal.letter);
  if (!id) return std::nullopt;
  return make_code(*id, literal.negative);
}

Literal CompiledTheory::decode(LitCode code) const {
  return Literal(names_[letter_of(code)], is_negative(code));
}

LiteralSet CompiledTheory::decode(const std::vector<LitCode>& codes) const {
  std::vector<Literal> out;
  out.reserve(codes.size());
  for (LitCode c : codes) out.push_back(decode(c));
  return LiteralSet(std::move(out));
}

Facts CompiledTheory::facts() const { return make_facts(fact_codes_); }

Facts CompiledTheory::make_facts(const std::vector<LitCode>& codes) const {
  Facts out(letter_count());
  for (LitCode c : codes) out.add(c);
  return out;
}

}  // namespace dlout
