#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace dlout {

// A signed propositional letter. Letters are case-sensitive identifiers.
struct Literal {
  std::string letter;
  bool negative = false;

  Literal() = default;
  explicit Literal(std::string letter_name, bool is_negative = false)
      : letter(std::move(letter_name)), negative(is_negative) {}

  Literal negate() const { return Literal(letter, !negative); }
  bool positive() const { return !negative; }

  // "a" or "-a", the theory-file spelling.
  std::string to_string() const;

  friend bool operator==(const Literal&, const Literal&) = default;
  // Ordered by letter, positive before negative.
  friend std::strong_ordering operator<=>(const Literal& a, const Literal& b) {
    if (auto c = a.letter <=> b.letter; c != 0) return c;
    return a.negative <=> b.negative;
  }
};

// Finite set of literals kept as a sorted, duplicate-free vector.
class LiteralSet {
 public:
  using const_iterator = std::vector<Literal>::const_iterator;

  LiteralSet() = default;
  LiteralSet(std::initializer_list<Literal> literals);
  explicit LiteralSet(std::vector<Literal> literals);

  bool insert(Literal literal);
  bool erase(const Literal& literal);
  bool contains(const Literal& literal) const;

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const_iterator begin() const { return items_.begin(); }
  const_iterator end() const { return items_.end(); }
  const Literal& operator[](std::size_t i) const { return items_[i]; }
  const std::vector<Literal>& items() const { return items_; }

  // Inconsistent iff it holds some literal together with its negation.
  bool is_consistent() const;
  // Sorted, duplicate-free letters of the members.
  std::vector<std::string> letters() const;
  LiteralSet negated() const;

  bool is_subset_of(const LiteralSet& other) const;
  bool intersects(const LiteralSet& other) const;

  LiteralSet unite(const LiteralSet& other) const;
  LiteralSet minus(const LiteralSet& other) const;

  // "{a,-b}"
  std::string to_string() const;

  friend bool operator==(const LiteralSet&, const LiteralSet&) = default;
  friend std::strong_ordering operator<=>(const LiteralSet& a, const LiteralSet& b) {
    return a.items_ <=> b.items_;
  }

 private:
  std::vector<Literal> items_;
};

// Smaller sets first, then lexicographic. Used for every reported ordering.
bool size_lex_less(const LiteralSet& a, const LiteralSet& b);

}  // namespace dlout
