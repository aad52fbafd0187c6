#include "jeopardy/label.hpp"

#include <algorithm>
#include <bit>

namespace jeopardy {

std::string Label::to_string() const {
  switch (kind_) {
    case Kind::input:
      return "input";
    case Kind::output:
      return "output";
    case Kind::numbered:
      break;
  }
  return std::to_string(index_);
}

LabelSet::LabelSet(std::initializer_list<Label> labels) {
  for (Label label : labels) insert(label);
}

LabelSet LabelSet::range(std::uint32_t first, std::uint32_t last) {
  LabelSet set;
  for (std::uint32_t i = first; i < last; ++i) set.insert(Label::numbered(i));
  return set;
}

std::size_t LabelSet::to_bit(Label label) {
  switch (label.kind()) {
    case Label::Kind::input:
      return 0;
    case Label::Kind::output:
      return 1;
    case Label::Kind::numbered:
      break;
  }
  return static_cast<std::size_t>(label.index()) + 2;
}

Label LabelSet::from_bit(std::size_t bit) {
  if (bit == 0) return Label::input();
  if (bit == 1) return Label::output();
  return Label::numbered(static_cast<std::uint32_t>(bit - 2));
}

void LabelSet::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

void LabelSet::insert(Label label) {
  const std::size_t bit = to_bit(label);
  if (words_.size() <= bit / 64) words_.resize(bit / 64 + 1, 0);
  words_[bit / 64] |= std::uint64_t{1} << (bit % 64);
}

void LabelSet::erase(Label label) {
  const std::size_t bit = to_bit(label);
  if (bit / 64 >= words_.size()) return;
  words_[bit / 64] &= ~(std::uint64_t{1} << (bit % 64));
  trim();
}

bool LabelSet::contains(Label label) const {
  const std::size_t bit = to_bit(label);
  if (bit / 64 >= words_.size()) return false;
  return (words_[bit / 64] >> (bit % 64)) & 1U;
}

std::size_t LabelSet::size() const {
  std::size_t n = 0;
  for (std::uint64_t word : words_) n += static_cast<std::size_t>(std::popcount(word));
  return n;
}

LabelSet& LabelSet::operator|=(const LabelSet& other) {
  if (words_.size() < other.words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

LabelSet& LabelSet::operator&=(const LabelSet& other) {
  if (words_.size() > other.words_.size()) words_.resize(other.words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  trim();
  return *this;
}

LabelSet& LabelSet::operator-=(const LabelSet& other) {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) words_[i] &= ~other.words_[i];
  trim();
  return *this;
}

bool LabelSet::is_subset_of(const LabelSet& other) const {
  if (words_.size() > other.words_.size()) return false;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

std::vector<Label> LabelSet::elements() const {
  std::vector<Label> out;
  for_each([&](Label label) { out.push_back(label); });
  return out;
}

std::strong_ordering operator<=>(const LabelSet& lhs, const LabelSet& rhs) {
  // Locate the lowest bit where the sets differ. Everything below it is a
  // shared prefix of both ascending sequences.
  const std::size_t n = std::max(lhs.words_.size(), rhs.words_.size());
  auto word = [](const LabelSet& s, std::size_t i) {
    return i < s.words_.size() ? s.words_[i] : std::uint64_t{0};
  };
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t a = word(lhs, i);
    const std::uint64_t b = word(rhs, i);
    if (a == b) continue;
    const std::uint64_t lowest = (a ^ b) & ~((a ^ b) - 1);
    const bool lhs_has = (a & lowest) != 0;
    const LabelSet& without = lhs_has ? rhs : lhs;
    const std::uint64_t above_mask = ~(lowest | (lowest - 1));
    bool without_continues = (word(without, i) & above_mask) != 0;
    for (std::size_t j = i + 1; !without_continues && j < without.words_.size(); ++j) {
      without_continues = without.words_[j] != 0;
    }
    // The set holding the differing bit has the smaller next element, unless
    // the other sequence has already ended (and is then a proper prefix).
    if (without_continues) {
      return lhs_has ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return lhs_has ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

std::size_t LabelSet::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (std::uint64_t word : words_) {
    h ^= std::hash<std::uint64_t>{}(word) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string LabelSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for_each([&](Label label) {
    if (!first) out += ", ";
    first = false;
    out += label.to_string();
  });
  out += "}";
  return out;
}

}  // namespace jeopardy
