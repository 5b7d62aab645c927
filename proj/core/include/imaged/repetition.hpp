#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "imaged/rational.hpp"
#include "imaged/word.hpp"

namespace imaged {

/// A factor w[start, start+length) with period `period` and length > period.
struct RepetitionWitness {
  std::size_t start = 0;
  std::size_t period = 0;
  std::size_t length = 0;

  [[nodiscard]] Rational exponent() const {
    return Rational(static_cast<std::int64_t>(length), static_cast<std::int64_t>(period));
  }
  friend bool operator==(const RepetitionWitness&, const RepetitionWitness&) = default;
};

/// Some repetition with period >= min_period and exponent strictly greater
/// than beta, or nothing if the word is (beta+, min_period)-free.
///
/// Periods are scanned in increasing order and the leftmost maximal run of
/// the first offending period is returned.
std::optional<RepetitionWitness> find_repetition(std::string_view w, const Rational& beta,
                                                 std::size_t min_period = 1);
std::optional<RepetitionWitness> find_repetition(const Word& w, const Rational& beta, std::size_t min_period = 1);

bool is_free(const Word& w, const Rational& beta, std::size_t min_period = 1);

/// Incremental (beta+, n)-freeness test for words grown at the right end.
///
/// For every period p the tracker keeps the length of the longest suffix
/// having period p, so appending a symbol costs O(current length).
/// Checkpoints make it usable under depth-first search.
class RepetitionTracker {
 public:
  RepetitionTracker(Rational beta, std::size_t min_period);

  /// Appends a symbol. Returns false when a repetition with exponent > beta
  /// now ends at the last position; the state is updated regardless.
  bool push(char symbol);
  /// Appends every symbol of `block`; false if any append fails.
  bool push(std::string_view block);

  void checkpoint();
  void rollback();

  [[nodiscard]] const std::string& text() const { return text_; }

 private:
  Rational beta_;
  std::size_t min_period_;
  std::string text_;
  // matches_[p]: number of trailing positions j with text[j] == text[j - p].
  std::vector<std::uint32_t> matches_;
  std::vector<std::pair<std::size_t, std::vector<std::uint32_t>>> saved_;
};

/// Same contract as RepetitionTracker for binary text appended in blocks,
/// with the text packed 64 symbols per machine word. A block is compared
/// against each earlier period 64 positions at a time, which pays off for
/// long blocks and large minimal periods.
class PackedRepetitionTracker {
 public:
  PackedRepetitionTracker(Rational beta, std::size_t min_period);

  /// Appends a block of '0'/'1' symbols. Returns false when a repetition with
  /// exponent > beta ends at some position of the block.
  bool push(std::string_view block);

  void checkpoint();
  void rollback();

  [[nodiscard]] std::size_t size() const { return size_; }

 private:
  std::uint64_t bits(std::size_t start, std::size_t length) const;
  std::size_t threshold(std::size_t period) const;

  Rational beta_;
  std::size_t min_period_;
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
  std::vector<std::uint32_t> runs_;  // runs_[p]: trailing positions j with text[j] == text[j - p]
  std::vector<std::pair<std::size_t, std::vector<std::uint32_t>>> saved_;
};

/// Visits every beta+-free word over `alphabet` of length <= max_length in
/// depth-first, lexicographic order (prefix-closed: only free prefixes are
/// extended). The empty word is visited first.
///
/// `first` restricts the first symbol, which lets callers partition work.
void for_each_free(Alphabet alphabet, const Rational& beta, std::size_t max_length,
                   const std::function<void(const Word&)>& visit, std::optional<Symbol> first = std::nullopt);

/// All beta+-free words of length exactly `length`, lexicographic.
WordSet enumerate_free(Alphabet alphabet, const Rational& beta, std::size_t length);

class NotFiniteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every binary word (including ε) having no factor in `forbidden`.
///
/// Throws NotFiniteError if a word of length `cap` avoids the set, since the
/// avoiding language is then infinite or at least longer than expected.
WordSet enumerate_avoiding(const WordSet& forbidden, std::size_t cap);

}  // namespace imaged
