#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "imaged/factor_oracle.hpp"
#include "imaged/morphism.hpp"
#include "imaged/word.hpp"

namespace imaged {

enum class WitnessKind { EmptyWord, Unary, Morphic };

const char* to_string(WitnessKind kind);

/// Evidence that `factor` is imaged: m(factor) occurs at `image_offset`
/// (in the examined word, or in the recorded oracle window).
struct ImagedWitness {
  Word factor;
  WitnessKind kind = WitnessKind::EmptyWord;
  std::optional<Morphism> morphism;
  std::optional<std::size_t> image_offset;
  std::optional<Word> preimage;  // oracle witnesses only: the window holding m(factor)
};

/// Letter statistics of a binary pattern, reused across many parses.
class ImagePattern {
 public:
  /// Requires a binary word containing both letters.
  explicit ImagePattern(const Word& f);

  [[nodiscard]] const Word& word() const { return f_; }
  [[nodiscard]] std::size_t zeros() const { return zeros_; }
  [[nodiscard]] std::size_t ones() const { return ones_; }

  /// True iff g = m(f) with |m(0)| = a and |m(1)| = b; the images are
  /// returned through m0/m1 on success.
  bool parse(std::string_view g, std::size_t a, std::size_t b, std::string_view& m0, std::string_view& m1) const;

  /// Some admissible m with |m(0)| + |m(1)| >= min_sum such that m(f) is a
  /// suffix of `text`. Candidates are tried by increasing image length of the
  /// last letter of f, then of the other letter.
  [[nodiscard]] std::optional<Morphism> suffix_image(std::string_view text, std::size_t min_sum) const;

  /// Some admissible m with m(f) a factor of `text`, with its offset.
  [[nodiscard]] std::optional<std::pair<Morphism, std::size_t>> find_image(std::string_view text) const;

 private:
  Word f_;
  std::size_t zeros_ = 0;
  std::size_t ones_ = 0;
};

/// Every morphism m other than the identity with non-empty images and
/// apply(m, f) = g, sorted. Throws std::invalid_argument if f does not
/// contain both letters or g is empty.
std::vector<Morphism> parse_as_image(const Word& g, const Word& f);

/// Decides whether f is imaged using only the finite word W:
/// ε and unary factors by rule, otherwise by an occurrence of some m(f)
/// inside W. Requires f to be a factor of W.
std::optional<ImagedWitness> imaged_in_finite(const Word& f, const Word& w);

/// Searches admissible m with m(0), m(1) drawn from the square inventory and
/// m(f) accepted by the oracle. Requires f to contain 00 and 11 and the
/// oracle cap to cover the longest candidate image.
std::optional<ImagedWitness> imaged_in_oracle(const Word& f, const FactorOracle& o, const SquareInventory& inv);

/// Pruned search for an admissible m with m(f) in the oracle language, with
/// m(x) drawn from candidates[x]. Candidate lists are tried in order.
std::optional<ImagedWitness> find_oracle_image(const Word& f, const FactorOracle& o,
                                               const std::vector<Word>& candidates0,
                                               const std::vector<Word>& candidates1);

}  // namespace imaged
