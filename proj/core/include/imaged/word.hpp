#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace imaged {

using Symbol = std::uint8_t;

/// Alphabet {0, ..., size-1} with size in {1, 2, 3}.
class Alphabet {
 public:
  constexpr Alphabet() = default;
  explicit Alphabet(int size);

  static Alphabet unary() { return Alphabet(1); }
  static Alphabet binary() { return Alphabet(2); }
  static Alphabet ternary() { return Alphabet(3); }

  [[nodiscard]] constexpr int size() const { return size_; }
  [[nodiscard]] constexpr bool contains(Symbol s) const { return s < size_; }

  friend constexpr bool operator==(Alphabet, Alphabet) = default;

 private:
  int size_ = 2;
};

/// A finite word over a small alphabet.
///
/// Symbols are stored as the ASCII digits '0'..'2', which is also the
/// serialized form ("0110"; the empty word serializes as ""). Words order
/// and compare by their symbol sequence only.
class Word {
 public:
  Word() = default;
  /// Throws std::invalid_argument on a character outside the alphabet.
  explicit Word(std::string_view digits, Alphabet alphabet = Alphabet::binary());

  static Word from_symbols(const std::vector<Symbol>& symbols, Alphabet alphabet);

  [[nodiscard]] std::size_t size() const { return digits_.size(); }
  [[nodiscard]] bool empty() const { return digits_.empty(); }
  [[nodiscard]] Alphabet alphabet() const { return alphabet_; }
  [[nodiscard]] Symbol operator[](std::size_t i) const { return static_cast<Symbol>(digits_[i] - '0'); }

  [[nodiscard]] const std::string& str() const { return digits_; }
  [[nodiscard]] std::string_view view() const { return digits_; }

  [[nodiscard]] Word substr(std::size_t pos, std::size_t len = std::string::npos) const;
  [[nodiscard]] bool contains(const Word& factor) const { return digits_.find(factor.digits_) != std::string::npos; }
  [[nodiscard]] bool contains(std::string_view factor) const { return digits_.find(factor) != std::string::npos; }
  [[nodiscard]] std::size_t count(Symbol s) const;
  /// Number of distinct symbols occurring in the word.
  [[nodiscard]] int letters_used() const;

  void push_back(Symbol s);
  void pop_back() { digits_.pop_back(); }

  friend Word operator+(const Word& a, const Word& b);

  friend bool operator==(const Word& a, const Word& b) { return a.digits_ == b.digits_; }
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) { return a.digits_ <=> b.digits_; }

 private:
  std::string digits_;
  Alphabet alphabet_{};
};

using WordSet = std::set<Word>;

/// Binary words from their digit strings; handy for bundled data and tests.
WordSet binary_words(std::initializer_list<std::string_view> digits);

/// Swaps 0 and 1. Throws std::invalid_argument on a non-binary word.
Word complement(const Word& w);

/// All distinct factors of length `length`; {ε} for length 0.
WordSet factor_set(const Word& w, std::size_t length);

std::ostream& operator<<(std::ostream& os, const Word& w);

}  // namespace imaged
