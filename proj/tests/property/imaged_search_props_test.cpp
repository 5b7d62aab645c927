#include <algorithm>
#include <map>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "../support/brute_force.hpp"
#include "imaged/factor_oracle.hpp"
#include "imaged/imaged.hpp"
#include "imaged/data.hpp"
#include "imaged/search.hpp"

using namespace imaged;

namespace {

std::set<std::string> compacts(const std::vector<Morphism>& ms) {
  std::set<std::string> out;
  for (const auto& m : ms) {
    out.insert(m.compact());
  }
  return out;
}

bool bi_literal(const std::string& f) {
  return f.find('0') != std::string::npos && f.find('1') != std::string::npos;
}

// Distinct factors of w that imaged_in_finite accepts.
std::set<std::string> imaged_set(const std::string& w) {
  std::set<std::string> out;
  for (std::size_t i = 0; i <= w.size(); ++i) {
    for (std::size_t l = 0; i + l <= w.size(); ++l) {
      const std::string f = w.substr(i, l);
      if (!out.count(f) && imaged_in_finite(Word(f), Word(w))) {
        out.insert(f);
      }
    }
  }
  return out;
}

}  // namespace

TEST(ParseProperty, CompleteAgainstBoundedEnumeration) {
  // f has both letters, so an image of length <= 10 uses letter images of length <= 9.
  const auto images = brute::nonempty_words_up_to(9);
  for (std::size_t flen = 2; flen <= 5; ++flen) {
    for (const auto& f : brute::all_words(2, flen)) {
      if (!bi_literal(f)) {
        continue;
      }
      const auto zeros = static_cast<std::size_t>(std::count(f.begin(), f.end(), '0'));
      const std::size_t ones = f.size() - zeros;
      // Every image pair with |m(f)| <= 10, indexed by the image.
      std::map<std::string, std::set<std::string>> expected;
      for (const auto& m0 : images) {
        for (const auto& m1 : images) {
          if ((m0 == "0" && m1 == "1") || zeros * m0.size() + ones * m1.size() > 10) {
            continue;
          }
          expected[brute::apply2(m0, m1, f)].insert(m0 + "/" + m1);
        }
      }
      for (const auto& g : brute::nonempty_words_up_to(10)) {
        const auto got = compacts(parse_as_image(Word(g), Word(f)));
        const auto it = expected.find(g);
        ASSERT_EQ(got, it == expected.end() ? std::set<std::string>{} : it->second) << "g=" << g << " f=" << f;
      }
    }
  }
}

TEST(ImagedProperty, AgreesWithBruteForceOnShortWords) {
  for (std::size_t len = 1; len <= 8; ++len) {
    for (const auto& w : brute::all_words(2, len)) {
      for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t l = 1; i + l <= w.size(); ++l) {
          const std::string f = w.substr(i, l);
          ASSERT_EQ(imaged_in_finite(Word(f), Word(w)).has_value(), brute::imaged_in(f, w)) << f << " in " << w;
        }
      }
    }
  }
}

TEST(ImagedProperty, WitnessesAreSound) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::string w = brute::random_binary(rng, 2 + rng() % 20);
    const std::size_t i = rng() % w.size();
    const std::size_t l = 1 + rng() % (w.size() - i);
    const Word f(w.substr(i, l));
    const auto wit = imaged_in_finite(f, Word(w));
    if (!wit || wit->kind != WitnessKind::Morphic) {
      continue;
    }
    ASSERT_TRUE(wit->morphism);
    ASSERT_TRUE(classify(*wit->morphism).admissible);
    const Word img = apply(*wit->morphism, f);
    ASSERT_TRUE(Word(w).contains(img));
    ASSERT_EQ(w.substr(*wit->image_offset, img.size()), img.str());
  }
}

TEST(ImagedProperty, FactorClosedAndMonotone) {
  std::map<std::string, std::set<std::string>> sets;
  for (std::size_t len = 0; len <= 12; ++len) {
    for (const auto& w : brute::all_words(2, len)) {
      sets.emplace(w, imaged_set(w));
    }
  }
  for (const auto& [w, imaged] : sets) {
    for (const auto& f : imaged) {
      for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t l = 0; i + l <= f.size(); ++l) {
          ASSERT_TRUE(imaged.count(f.substr(i, l))) << f.substr(i, l) << " of " << f << " in " << w;
        }
      }
    }
    if (w.size() < 12) {
      for (char x : {'0', '1'}) {
        const auto& longer = sets.at(w + x);
        for (const auto& f : imaged) {
          ASSERT_TRUE(longer.count(f)) << f << " lost from " << w << " to " << w + x;
        }
      }
    }
  }
}

TEST(ImagedProperty, LengthSevenSufficiency) {
  // If m(f7) is absent for a length-7 factor f7 of f, then m(f) is absent.
  const auto o = FactorOracle::build(data::morphism37(), data::kAlpha, 300);
  const auto images = brute::nonempty_words_up_to(3);
  std::size_t pruned = 0;
  for (const auto& f : o.factors_of_length(8)) {
    for (const auto& m0 : images) {
      for (const auto& m1 : images) {
        if (m0 == "0" && m1 == "1") {
          continue;
        }
        const bool prefix_absent = !o.is_factor(brute::apply2(m0, m1, f.str().substr(0, 7)));
        const bool suffix_absent = !o.is_factor(brute::apply2(m0, m1, f.str().substr(1, 7)));
        if (prefix_absent || suffix_absent) {
          ++pruned;
          ASSERT_FALSE(o.is_factor(brute::apply2(m0, m1, f.str())));
        }
      }
    }
  }
  EXPECT_GT(pruned, 0U);
  // And no length-7 factor is imaged through the ten candidate morphisms.
  for (const auto& m : data::short_morphisms()) {
    for (const auto& f : o.factors_of_length(7)) {
      ASSERT_FALSE(o.is_factor(apply(m, f))) << m.compact() << " " << f;
    }
  }
}

TEST(CertifiedProperty, IncrementalEqualsRecount) {
  for (std::size_t len = 0; len <= 10; ++len) {
    for (const auto& w : brute::all_words(2, len)) {
      CertifiedImaged c;
      for (char x : w) {
        c.append(x);
      }
      ASSERT_EQ(c.count(), certified_imaged_count(Word(w))) << w;
      ASSERT_EQ(c.certified(), imaged_set(w)) << w;
    }
  }
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const std::string w = brute::random_binary(rng, 11 + rng() % 5);
    CertifiedImaged c;
    for (char x : w) {
      c.append(x);
    }
    ASSERT_EQ(c.count(), certified_imaged_count(Word(w))) << w;
  }
}

TEST(CertifiedProperty, CountNeverDecreasesAlongPaths) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 1000; ++trial) {
    CertifiedImaged c;
    std::size_t last = c.count();
    const std::size_t len = 1 + rng() % 15;
    for (std::size_t i = 0; i < len; ++i) {
      c.append(static_cast<char>('0' + (rng() & 1)));
      ASSERT_GE(c.count(), last) << c.word();
      last = c.count();
    }
  }
}

TEST(CertifiedProperty, CountIsComplementInvariant) {
  for (const auto& w : brute::all_words(2, 11)) {
    ASSERT_EQ(certified_imaged_count(Word(w)), certified_imaged_count(complement(Word(w)))) << w;
  }
}

TEST(SearchProperty, ImageRuleCoversComplementedPatterns) {
  for (const auto& f : data::backtrack_patterns()) {
    const Word fbar = complement(f);
    for (std::size_t len = 1; len <= 12; ++len) {
      for (const auto& s : brute::all_words(2, len)) {
        std::set<std::string> direct;
        for (const auto& m : parse_as_image(Word(s), f)) {
          if (m.image(0).size() + m.image(1).size() >= 3) {
            direct.insert(m.image(1).str() + "/" + m.image(0).str());  // swapped
          }
        }
        std::set<std::string> mirrored;
        for (const auto& m : parse_as_image(Word(s), fbar)) {
          if (m.image(0).size() + m.image(1).size() >= 3) {
            mirrored.insert(m.compact());
          }
        }
        ASSERT_EQ(direct, mirrored) << "f=" << f << " s=" << s;
      }
    }
  }
}

TEST(SearchProperty, RemovingRulesNeverShrinksTheTree) {
  const auto l16 = data::backtrack_patterns();
  std::map<unsigned, std::uint64_t> nodes;
  for (unsigned rules = 0; rules <= kAllRules; ++rules) {
    SearchConfig cfg;
    cfg.rules = rules;
    cfg.depth_cap = 18;
    nodes[rules] = thm3_search(l16, cfg).nodes_visited;
  }
  for (unsigned a = 0; a <= kAllRules; ++a) {
    for (unsigned b = 0; b <= kAllRules; ++b) {
      if ((a & b) == a) {  // a is a subset of b
        EXPECT_GE(nodes[a], nodes[b]) << a << " vs " << b;
      }
    }
  }
}

TEST(SearchProperty, ReportsIndependentOfWorkersAndSplit) {
  const auto l16 = data::backtrack_patterns();
  SearchConfig base;
  base.depth_cap = 30;
  const auto ref3 = thm3_search(l16, base);
  const auto ref5 = thm5_search(30, base);
  for (unsigned threads : {2U, 3U}) {
    for (std::size_t split : {0U, 5U, 12U, 20U}) {
      SearchConfig cfg = base;
      cfg.threads = threads;
      cfg.split_depth = split;
      EXPECT_EQ(thm3_search(l16, cfg), ref3) << threads << " " << split;
      EXPECT_EQ(thm5_search(30, cfg), ref5) << threads << " " << split;
    }
  }
  EXPECT_EQ(thm3_search(l16, base), ref3);
}
