#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "imaged/imaged.hpp"
#include "imaged/word.hpp"

namespace imaged {

/// Backtrack rules of the length-6 search, combinable as a bit set.
enum Rule : unsigned {
  kRuleRun = 1,         // suffix 0000 or 1111
  kRuleComplement = 2,  // word contains the complement of its length-6 suffix
  kRuleImage = 4,       // suffix is m(f) for a listed f present (or complemented), |m(0)|+|m(1)| >= 3
  kAllRules = 7,
};

struct SearchConfig {
  bool first_letter_fixed = true;
  std::optional<std::size_t> depth_cap;
  unsigned rules = kAllRules;
  /// Workers for the subtrees below split_depth. Reports do not depend on it.
  unsigned threads = 1;
  std::size_t split_depth = 12;
  /// Called after each finished subtree with (units done, units total).
  std::function<void(std::size_t, std::size_t)> progress;
};

struct SearchReport {
  enum class Outcome { TreeFinite, DepthCapExceeded };

  Outcome outcome = Outcome::TreeFinite;
  std::uint64_t nodes_visited = 0;
  std::size_t max_depth = 0;
  Word deepest_word;  // lexicographically first word of maximal depth
  std::map<std::string, std::uint64_t> rule_fires;
  std::uint64_t cap_hits = 0;

  [[nodiscard]] bool tree_finite() const { return outcome == Outcome::TreeFinite; }
  friend bool operator==(const SearchReport&, const SearchReport&) = default;
};

const char* to_string(SearchReport::Outcome outcome);

/// Names used in SearchReport::rule_fires.
inline constexpr const char* kFireRun = "suffix-run";
inline constexpr const char* kFireComplement = "complement-of-suffix";
inline constexpr const char* kFireImage = "suffix-image";
inline constexpr const char* kFireTarget = "target-reached";

/// Which rule (if any) makes the search backtrack at `word`.
std::optional<Rule> backtrack_rule(const std::string& word, const std::vector<ImagePattern>& patterns,
                                   const std::vector<Word>& complements, unsigned rules);

/// Depth-first search over binary words, backtracking by the three rules.
/// A tree-finite outcome means no infinite binary word avoids imaged
/// factors of length 6.
SearchReport thm3_search(const std::vector<Word>& patterns, const SearchConfig& cfg = {});

/// Imaged factors of a finite binary word W that are certified from W
/// alone: ε, unary factors, and factors f with some admissible m(f) inside W.
///
/// The certified set is factor-closed, so it is grown breadth-first from ε
/// through one-letter extensions. Appending a letter only needs suffixes of
/// the new word as fresh image occurrences. Counting stops once `stop_at`
/// words are certified.
class CertifiedImaged {
 public:
  explicit CertifiedImaged(std::size_t stop_at = SIZE_MAX);

  void append(char letter);

  [[nodiscard]] const std::string& word() const { return word_; }
  [[nodiscard]] std::size_t count() const { return certified_.size(); }
  [[nodiscard]] const std::set<std::string>& certified() const { return certified_; }

 private:
  bool witnessed(const std::string& f, const std::string& previous) const;

  std::size_t stop_at_;
  std::string word_;
  std::set<std::string> certified_;
};

/// Reference count: distinct factors f of w with imaged_in_finite(f, w).
std::size_t certified_imaged_count(const Word& w);

/// Depth-first search pruning once the certified count reaches `target`.
/// A tree-finite outcome means every infinite binary word has at least
/// `target` imaged factors.
SearchReport thm5_search(std::size_t target, const SearchConfig& cfg = {});

struct SquareBoundResult {
  std::size_t max_length = 0;
  std::vector<Word> witnesses;  // every surviving word of length max_length
  bool reached_cap = false;
};

/// Longest binary words with no square uu, |u| >= min_period, by exhaustive
/// search. Stops at the first word reaching depth_cap (reached_cap is then
/// set and the only witness is that word).
SquareBoundResult max_word_without_big_squares(std::size_t min_period, std::size_t depth_cap = 64);

}  // namespace imaged
