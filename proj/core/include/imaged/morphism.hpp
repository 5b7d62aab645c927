#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "imaged/word.hpp"

namespace imaged {

/// Derived classification of a morphism.
struct MorphismFlags {
  bool erasing = false;
  bool identity = false;
  bool complementary = false;
  bool admissible = false;  // non-erasing and not the identity
  bool neat = false;        // admissible and not the complementary morphism

  friend bool operator==(const MorphismFlags&, const MorphismFlags&) = default;
};

/// A morphism from words over `source` to words over `target`, given by one
/// image per source symbol.
class Morphism {
 public:
  Morphism() = default;
  /// The target alphabet is the smallest one (at least binary) holding every
  /// image symbol.
  explicit Morphism(std::vector<Word> images);
  Morphism(std::vector<Word> images, Alphabet target);

  /// Binary shorthand "IMAGE0/IMAGE1", e.g. "0/01".
  static Morphism parse_compact(std::string_view text);
  /// One "SYMBOL -> IMAGE" line per symbol; '#' comments and blank lines are
  /// ignored. Symbols must be 0, 1, ... in order.
  static Morphism parse_lines(std::string_view text);
  /// Either of the two formats above.
  static Morphism parse(std::string_view text);

  [[nodiscard]] Alphabet source() const { return source_; }
  [[nodiscard]] Alphabet target() const { return target_; }
  [[nodiscard]] const Word& image(Symbol s) const { return images_.at(s); }
  [[nodiscard]] const std::vector<Word>& images() const { return images_; }

  /// Line format, parseable by parse_lines.
  [[nodiscard]] std::string to_text() const;
  /// "IMAGE0/IMAGE1" (images joined by '/').
  [[nodiscard]] std::string compact() const;
  /// FNV-1a 64 of to_text(), as 16 hex digits.
  [[nodiscard]] std::string digest() const;

  friend bool operator==(const Morphism& a, const Morphism& b) { return a.images_ == b.images_; }
  friend std::strong_ordering operator<=>(const Morphism& a, const Morphism& b) {
    return a.images_ <=> b.images_;
  }

 private:
  Alphabet source_{};
  Alphabet target_{};
  std::vector<Word> images_;
};

/// Concatenation of the images of the symbols of w.
/// Throws std::invalid_argument on a symbol outside the source alphabet.
Word apply(const Morphism& m, const Word& w);

MorphismFlags classify(const Morphism& m);

/// q if every image has length q.
std::optional<std::size_t> uniform_width(const Morphism& m);

/// An occurrence of image(c) at `offset` in image(a)image(b) that is neither
/// flush left with a = c nor flush right with b = c.
struct SyncViolation {
  Symbol a = 0;
  Symbol b = 0;
  Symbol c = 0;
  std::size_t offset = 0;
};

/// First violation in (a, b, c, offset) order. Throws on an erasing morphism.
std::optional<SyncViolation> find_sync_violation(const Morphism& m);

/// Every occurrence of image(c) inside image(a)image(b) is flush left with
/// a = c or flush right with b = c. Throws on an erasing morphism.
bool is_synchronizing(const Morphism& m);

std::string fnv1a_hex(std::string_view data);

}  // namespace imaged
