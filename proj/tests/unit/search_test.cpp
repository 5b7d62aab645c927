#include <gtest/gtest.h>

#include "imaged/data.hpp"
#include "imaged/search.hpp"

using namespace imaged;

namespace {

struct Rules {
  std::vector<ImagePattern> patterns;
  std::vector<Word> complements;
};

const Rules& listed_rules() {
  static const Rules r = [] {
    Rules out;
    for (const auto& f : data::backtrack_patterns()) {
      out.patterns.emplace_back(f);
      out.complements.push_back(complement(f));
    }
    return out;
  }();
  return r;
}

std::optional<Rule> rule_at(const std::string& w, unsigned rules = kAllRules) {
  return backtrack_rule(w, listed_rules().patterns, listed_rules().complements, rules);
}

}  // namespace

TEST(BacktrackRules, Patterns) {
  const auto l16 = data::backtrack_patterns();
  EXPECT_EQ(l16.size(), 16U);
  for (const auto& f : l16) {
    EXPECT_EQ(f.size(), 6U) << f;
  }
}

TEST(BacktrackRules, SuffixRun) {
  EXPECT_EQ(rule_at("0100000"), kRuleRun);
  EXPECT_EQ(rule_at("1111"), kRuleRun);
  EXPECT_FALSE(rule_at("0111", kRuleRun));
}

TEST(BacktrackRules, ComplementOfSuffix) {
  // Suffix 001011 has complement 110100, which occurs earlier.
  EXPECT_EQ(rule_at("110100" "001011", kRuleComplement), kRuleComplement);
  EXPECT_FALSE(rule_at("001011", kRuleComplement));
  EXPECT_FALSE(rule_at("00101", kRuleComplement));
}

TEST(BacktrackRules, SuffixImageNeedsPatternPresent) {
  // Whatever the suffix, rule 3 only fires once f or its complement occurs.
  for (const auto& f : data::backtrack_patterns()) {
    const std::string w = f.str();
    const auto r = rule_at(w, kRuleImage);
    if (r) {
      EXPECT_EQ(*r, kRuleImage);
    }
  }
  EXPECT_FALSE(rule_at("0", kRuleImage));
  EXPECT_FALSE(rule_at("01", kRuleImage));
}

TEST(Thm3Search, NoImageRuleNeverTerminates) {
  SearchConfig cfg;
  cfg.rules = kRuleRun | kRuleComplement;
  cfg.depth_cap = 40;
  const auto r = thm3_search(data::backtrack_patterns(), cfg);
  EXPECT_EQ(r.outcome, SearchReport::Outcome::DepthCapExceeded);
  EXPECT_GT(r.cap_hits, 0U);
  EXPECT_EQ(r.max_depth, 40U);
}

TEST(Thm3Search, CapBelowDepthIsReported) {
  SearchConfig cfg;
  cfg.depth_cap = 30;
  const auto r = thm3_search(data::backtrack_patterns(), cfg);
  EXPECT_FALSE(r.tree_finite());
  EXPECT_EQ(r.max_depth, 30U);
  EXPECT_THROW(thm3_search(data::backtrack_patterns(), SearchConfig{.depth_cap = 0}), std::invalid_argument);
}

TEST(Thm5Search, TargetOnePrunesAtRoot) {
  const auto r = thm5_search(1);
  EXPECT_TRUE(r.tree_finite());
  EXPECT_EQ(r.nodes_visited, 1U);
  EXPECT_EQ(r.max_depth, 0U);
  EXPECT_EQ(r.rule_fires.at(kFireTarget), 1U);
  EXPECT_THROW(thm5_search(0), std::invalid_argument);
}

TEST(Thm5Search, FrozenSmallTargets) {
  // Recorded from earlier runs of the same configuration.
  const auto r20 = thm5_search(20);
  EXPECT_TRUE(r20.tree_finite());
  EXPECT_EQ(r20.nodes_visited, 982U);
  EXPECT_EQ(r20.max_depth, 19U);
  const auto r30 = thm5_search(30);
  EXPECT_TRUE(r30.tree_finite());
  EXPECT_EQ(r30.nodes_visited, 22724U);
  EXPECT_EQ(r30.max_depth, 37U);
}

TEST(Thm5Search, SymmetryReduction) {
  // Without fixing the first letter the tree is mirrored: twice the nodes
  // below the root.
  const auto fixed = thm5_search(20);
  const auto free = thm5_search(20, SearchConfig{.first_letter_fixed = false});
  EXPECT_EQ(free.nodes_visited - 1, 2 * (fixed.nodes_visited - 1));
  EXPECT_EQ(free.max_depth, fixed.max_depth);
}

TEST(CertifiedImaged, Counts) {
  EXPECT_EQ(certified_imaged_count(Word("")), 1U);
  EXPECT_EQ(certified_imaged_count(Word("0")), 2U);
  EXPECT_EQ(certified_imaged_count(Word("01")), 3U);
  // ε 0 1 00 11, then 01 (00/11), 001 (0/11) and 011 (00/1); not 0011.
  EXPECT_EQ(certified_imaged_count(Word("0011")), 8U);
  CertifiedImaged c;
  for (char x : std::string("0011")) {
    c.append(x);
  }
  EXPECT_EQ(c.count(), 8U);
  EXPECT_TRUE(c.certified().count("01"));
  EXPECT_FALSE(c.certified().count("0011"));
}

TEST(SquareBound, Examples) {
  const auto two = max_word_without_big_squares(2);
  EXPECT_EQ(two.max_length, 18U);
  EXPECT_FALSE(two.reached_cap);
  EXPECT_EQ(two.witnesses, (std::vector<Word>{Word("010011000111001101"), Word("101100111000110010")}));
  const auto one = max_word_without_big_squares(1);
  EXPECT_EQ(one.max_length, 3U);
  EXPECT_EQ(one.witnesses, (std::vector<Word>{Word("010"), Word("101")}));
  const auto three = max_word_without_big_squares(3, 40);
  EXPECT_GE(three.max_length, 18U);
  EXPECT_TRUE(three.reached_cap);
  EXPECT_THROW(max_word_without_big_squares(0), std::invalid_argument);
}
