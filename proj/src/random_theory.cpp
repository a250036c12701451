#include <random>

#include "dlout/errors.hpp"
#include "dlout/oracles.hpp"

namespace dlout {

namespace {

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  // Uniform in [0, bound). Raw engine output keeps results identical across
  // standard libraries.
  std::size_t below(std::size_t bound) { return static_cast<std::size_t>(rng_() % bound); }
  bool chance(unsigned percent) { return below(100) < percent; }

 private:
  std::mt19937_64 rng_;
};

enum class PrereqSign { positive, negative, any };

}  // namespace

DefaultTheory random_theory(const TheoryProfile& profile) {
  const std::size_t n = profile.letters;
  const std::size_t m = profile.rules;
  const std::size_t c = profile.tightness;
  if (n == 0 || m == 0 || c == 0) {
    throw InfeasibleProfile("letters, rules and tightness must be positive");
  }
  if (c > n) {
    throw InfeasibleProfile("tightness " + std::to_string(c) + " exceeds the letter count " +
                            std::to_string(n));
  }
  if (profile.fragment == FragmentTag::NMU && m < 2) {
    throw InfeasibleProfile("an NMU profile needs at least two rules");
  }
  if (profile.fragment == FragmentTag::DF && n < 2) {
    throw InfeasibleProfile("a DF profile needs at least two letters");
  }

  Draw draw(profile.seed);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("a" + std::to_string(i));
  auto layer = [c](std::size_t letter) { return letter / c; };
  // A letter whose layer is not after the layer of `head`.
  auto earlier = [&](std::size_t head) { return draw.below(std::min(n, (layer(head) + 1) * c)); };
  auto literal = [&](std::size_t letter, bool negative) { return Literal(names[letter], negative); };

  DefaultTheory theory;
  std::vector<std::uint8_t> used(n, 0);
  auto add = [&](LiteralSet pre, LiteralSet just, LiteralSet cons) {
    for (const LiteralSet* part : {&pre, &just, &cons}) {
      for (const auto& l : *part) used[std::stoul(l.letter.substr(1))] = 1;
    }
    theory.add_default(DefaultRule(std::move(pre), std::move(just), std::move(cons)));
  };

  for (std::size_t r = 0; r < m; ++r) {
    std::size_t head = draw.below(n);
    bool head_negative = draw.chance(50);
    if (profile.fragment == FragmentTag::DF) {
      // The first rule gets a two-letter prerequisite, which keeps the
      // theory outside NMU.
      if (r == 0 && c == 1 && head == 0) head = 1;
      std::size_t limit = std::min(n, (layer(head) + 1) * c);
      LiteralSet cons{literal(head, head_negative)};
      if (draw.chance(30)) {
        std::size_t from = layer(head) * c;
        cons.insert(literal(from + draw.below(n - from), draw.chance(50)));
      }
      LiteralSet pre;
      if (r == 0) {
        std::size_t p = draw.below(limit);
        std::size_t q = (p + 1 + draw.below(limit - 1)) % limit;
        pre.insert(literal(p, draw.chance(50)));
        pre.insert(literal(q, draw.chance(50)));
      } else {
        for (std::size_t k = draw.below(3); k > 0; --k) {
          pre.insert(literal(draw.below(limit), draw.chance(50)));
        }
      }
      LiteralSet just = cons;
      if (!profile.normal && draw.chance(50)) {
        just = LiteralSet{literal(draw.below(n), draw.chance(50))};
      }
      add(std::move(pre), std::move(just), std::move(cons));
      continue;
    }

    PrereqSign sign = PrereqSign::positive;
    if (profile.fragment == FragmentTag::DNU) sign = PrereqSign::negative;
    if (profile.fragment == FragmentTag::NMU) sign = PrereqSign::any;
    bool free = draw.chance(20);
    // Pin down the exact fragment with the first rules.
    if ((profile.fragment == FragmentTag::DNU && r == 0) ||
        (profile.fragment == FragmentTag::NMU && r < 2)) {
      free = false;
    }
    LiteralSet pre;
    if (!free) {
      bool negative = sign == PrereqSign::negative ||
                      (sign == PrereqSign::any && (r == 1 || (r > 1 && draw.chance(50))));
      pre.insert(literal(earlier(head), negative));
    }
    LiteralSet cons{literal(head, head_negative)};
    add(std::move(pre), cons, cons);
  }

  for (std::size_t i = 0; i < n; ++i) {
    std::size_t roll = draw.below(10);
    if (roll < 4) {
      theory.add_fact(literal(i, false));
    } else if (roll < 7 || !used[i]) {
      theory.add_fact(literal(i, draw.chance(50)));
    }
  }
  return theory;
}

}  // namespace dlout
