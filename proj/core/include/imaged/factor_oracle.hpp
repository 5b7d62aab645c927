#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "imaged/morphism.hpp"
#include "imaged/rational.hpp"
#include "imaged/suffix_automaton.hpp"
#include "imaged/word.hpp"

namespace imaged {

/// Where an accepted query occurs: inside apply(morphism, preimage) at
/// `offset`.
struct OracleWitness {
  Word preimage;
  std::size_t offset = 0;
};

/// Factor membership, up to a length cap, for the union over all
/// alpha+-free pre-images y of the factors of apply(morphism, y).
///
/// A factor of length <= max_len of a q-uniform image spans at most
/// ceil(max_len / q) + 1 image blocks, so indexing the images of all free
/// pre-images of that window length answers every such query exactly.
class FactorOracle {
 public:
  /// Throws std::invalid_argument if the morphism is not uniform or alpha is
  /// outside (1, 2), and std::runtime_error if no free window exists.
  static FactorOracle build(const Morphism& m, const Rational& alpha, std::size_t max_len);

  /// Rebuilds from a window list written by save_windows; the header key
  /// must match (morphism digest, alpha, window length).
  static FactorOracle load_windows(const Morphism& m, const Rational& alpha, std::size_t max_len,
                                   const std::string& path);
  void save_windows(const std::string& path) const;

  [[nodiscard]] const Morphism& morphism() const { return morphism_; }
  [[nodiscard]] const Rational& alpha() const { return alpha_; }
  [[nodiscard]] std::size_t max_len() const { return max_len_; }
  [[nodiscard]] std::size_t window() const { return window_; }
  [[nodiscard]] std::size_t window_count() const { return preimages_.size(); }
  [[nodiscard]] const std::vector<Word>& preimages() const { return preimages_; }
  /// Deduplicated window images, in pre-image order.
  [[nodiscard]] std::vector<std::string> window_images() const;

  /// Throws std::out_of_range when |v| > max_len.
  [[nodiscard]] bool is_factor(const Word& v) const;
  [[nodiscard]] bool is_factor(std::string_view v) const;
  [[nodiscard]] std::optional<OracleWitness> witness(const Word& v) const;

  /// Incremental matching for pruned searches. A cursor carries the
  /// automaton state plus the matched length so the cap stays enforced.
  struct Cursor {
    SuffixAutomaton::State state = SuffixAutomaton::kRoot;
    std::size_t length = 0;
    [[nodiscard]] bool alive() const { return state != SuffixAutomaton::kNone; }
  };
  [[nodiscard]] Cursor advance(Cursor c, std::string_view text) const;

  /// Exact factor set of the language at this length.
  [[nodiscard]] WordSet factors_of_length(std::size_t length) const;
  /// Every non-empty factor of length <= max_length, by automaton traversal.
  [[nodiscard]] WordSet factors_up_to(std::size_t max_length) const;

 private:
  FactorOracle(Morphism m, Rational alpha, std::size_t max_len, std::size_t window);
  void index(std::vector<Word> preimages);
  void check_length(std::size_t length) const;

  Morphism morphism_;
  Rational alpha_;
  std::size_t max_len_ = 0;
  std::size_t window_ = 0;
  std::vector<Word> preimages_;
  std::vector<std::size_t> starts_;  // offset of each window image in text_
  std::string text_;                 // images joined by '#'
  SuffixAutomaton automaton_;
};

/// Square roots u (1 <= |u| <= max_period) with uu in the oracle language.
struct SquareInventory {
  std::size_t max_period = 0;
  std::map<std::size_t, WordSet> by_length;

  [[nodiscard]] std::size_t size() const;
  [[nodiscard]] bool contains(const Word& u) const;
  [[nodiscard]] WordSet all() const;
};

/// Requires 2 * max_period <= o.max_len().
SquareInventory square_roots(const FactorOracle& o, std::size_t max_period);

/// Outcome of a language check: empty counterexample means pass.
struct CheckResult {
  std::vector<Word> counterexample;
  [[nodiscard]] bool pass() const { return counterexample.empty(); }
};

/// Fails with the first (lexicographic) element of `forbidden` that occurs.
CheckResult check_avoids(const FactorOracle& o, const WordSet& forbidden);

/// Fails with (f, complement(f)) if both occur at this length.
CheckResult check_no_complement_pairs(const FactorOracle& o, std::size_t length);

/// Disjunction of conjunctions: a word satisfies it when, for some clause,
/// it contains every word of that clause.
using CoverRequirement = std::vector<std::vector<Word>>;

bool satisfies(const Word& w, const CoverRequirement& requirement);

/// Fails with the first length-`length` factor that violates the requirement.
CheckResult check_length_cover(const FactorOracle& o, std::size_t length, const CoverRequirement& requirement);

}  // namespace imaged
