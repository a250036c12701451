#include "dlout/literal.hpp"

#include <algorithm>
#include <iterator>

namespace dlout {

std::string Literal::to_string() const { return negative ? "-" + letter : letter; }

LiteralSet::LiteralSet(std::initializer_list<Literal> literals)
    : LiteralSet(std::vector<Literal>(literals)) {}

LiteralSet::LiteralSet(std::vector<Literal> literals) : items_(std::move(literals)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool LiteralSet::insert(Literal literal) {
  auto it = std::lower_bound(items_.begin(), items_.end(), literal);
  if (it != items_.end() && *it == literal) return false;
  items_.insert(it, std::move(literal));
  return true;
}

bool LiteralSet::erase(const Literal& literal) {
  auto it = std::lower_bound(items_.begin(), items_.end(), literal);
  if (it == items_.end() || *it != literal) return false;
  items_.erase(it);
  return true;
}

bool LiteralSet::contains(const Literal& literal) const {
  return std::binary_search(items_.begin(), items_.end(), literal);
}

bool LiteralSet::is_consistent() const {
  // Complementary literals are adjacent in the sorted order.
  for (std::size_t i = 1; i < items_.size(); ++i) {
    if (items_[i].letter == items_[i - 1].letter) return false;
  }
  return true;
}

std::vector<std::string> LiteralSet::letters() const {
  std::vector<std::string> out;
  for (const auto& l : items_) {
    if (out.empty() || out.back() != l.letter) out.push_back(l.letter);
  }
  return out;
}

LiteralSet LiteralSet::negated() const {
  std::vector<Literal> out;
  out.reserve(items_.size());
  for (const auto& l : items_) out.push_back(l.negate());
  return LiteralSet(std::move(out));
}

bool LiteralSet::is_subset_of(const LiteralSet& other) const {
  return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
}

bool LiteralSet::intersects(const LiteralSet& other) const {
  auto a = items_.begin();
  auto b = other.items_.begin();
  while (a != items_.end() && b != other.items_.end()) {
    if (*a == *b) return true;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return false;
}

LiteralSet LiteralSet::unite(const LiteralSet& other) const {
  LiteralSet out;
  std::set_union(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                 std::back_inserter(out.items_));
  return out;
}

LiteralSet LiteralSet::minus(const LiteralSet& other) const {
  LiteralSet out;
  std::set_difference(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                      std::back_inserter(out.items_));
  return out;
}

std::string LiteralSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (i > 0) out += ',';
    out += items_[i].to_string();
  }
  out += '}';
  return out;
}

bool size_lex_less(const LiteralSet& a, const LiteralSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace dlout
