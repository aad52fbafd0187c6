#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace jeopardy {

/// A program point. Numbered labels are produced by the labeler; `input`
/// and `output` only ever appear in the two top-level seed configurations.
class Label {
 public:
  enum class Kind : std::uint8_t { input, output, numbered };

  static constexpr Label input() { return Label(Kind::input, 0); }
  static constexpr Label output() { return Label(Kind::output, 0); }
  static constexpr Label numbered(std::uint32_t index) { return Label(Kind::numbered, index); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_numbered() const { return kind_ == Kind::numbered; }
  /// Only meaningful for numbered labels.
  constexpr std::uint32_t index() const { return index_; }

  /// input < output < 0 < 1 < ...
  friend constexpr auto operator<=>(const Label&, const Label&) = default;
  friend constexpr bool operator==(const Label&, const Label&) = default;

  std::string to_string() const;

 private:
  constexpr Label(Kind kind, std::uint32_t index) : kind_(kind), index_(index) {}

  Kind kind_;
  std::uint32_t index_;
};

/// A finite set of labels, stored as a bitset. Bit 0 is `input`, bit 1 is
/// `output`, bit n+2 is label n. Trailing zero words are never stored, so
/// equal sets have equal representations.
class LabelSet {
 public:
  LabelSet() = default;
  LabelSet(std::initializer_list<Label> labels);

  /// All numbered labels in [first, last).
  static LabelSet range(std::uint32_t first, std::uint32_t last);

  void insert(Label label);
  void erase(Label label);
  bool contains(Label label) const;
  bool empty() const { return words_.empty(); }
  std::size_t size() const;

  LabelSet& operator|=(const LabelSet& other);
  LabelSet& operator&=(const LabelSet& other);
  LabelSet& operator-=(const LabelSet& other);

  friend LabelSet operator|(LabelSet lhs, const LabelSet& rhs) { return lhs |= rhs; }
  friend LabelSet operator&(LabelSet lhs, const LabelSet& rhs) { return lhs &= rhs; }
  friend LabelSet operator-(LabelSet lhs, const LabelSet& rhs) { return lhs -= rhs; }

  bool is_subset_of(const LabelSet& other) const;

  /// Elements in ascending Label order.
  std::vector<Label> elements() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word != 0) {
        const int bit = __builtin_ctzll(word);
        fn(from_bit(w * 64 + static_cast<std::size_t>(bit)));
        word &= word - 1;
      }
    }
  }

  friend bool operator==(const LabelSet&, const LabelSet&) = default;
  /// Lexicographic comparison of the ascending element sequences.
  friend std::strong_ordering operator<=>(const LabelSet& lhs, const LabelSet& rhs);

  std::size_t hash() const;

  /// Renders as `{input, 3, 7}`.
  std::string to_string() const;

 private:
  static std::size_t to_bit(Label label);
  static Label from_bit(std::size_t bit);
  void trim();

  std::vector<std::uint64_t> words_;
};

}  // namespace jeopardy

template <>
struct std::hash<jeopardy::LabelSet> {
  std::size_t operator()(const jeopardy::LabelSet& set) const noexcept { return set.hash(); }
};
