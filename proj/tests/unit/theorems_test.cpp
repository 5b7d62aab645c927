#include <gtest/gtest.h>

#include <json.hpp>

#include "imaged/data.hpp"
#include "imaged/theorems.hpp"

using namespace imaged;

namespace {

const Stage& stage(const Report& r, const std::string& name) {
  for (const auto& s : r.stages) {
    if (s.name == name) {
      return s;
    }
  }
  throw std::runtime_error("no stage " + name);
}

Morphism flip_bit(const Morphism& m, Symbol letter, std::size_t pos) {
  std::vector<Word> images;
  for (int s = 0; s < m.source().size(); ++s) {
    std::string img = m.image(static_cast<Symbol>(s)).str();
    if (s == letter) {
      img[pos] = img[pos] == '0' ? '1' : '0';
    }
    images.emplace_back(img);
  }
  return Morphism(images);
}

}  // namespace

TEST(BundledData, ShortMorphisms) {
  const auto sm = data::short_morphisms();
  EXPECT_EQ(sm.size(), 10U);
  for (const auto& m : sm) {
    const auto f = classify(m);
    EXPECT_TRUE(f.admissible) << m.compact();
    EXPECT_FALSE(f.identity) << m.compact();
    EXPECT_FALSE(f.complementary) << m.compact();
  }
  EXPECT_EQ(sm.front(), Morphism::parse_compact("0/01"));
}

TEST(BundledData, LongMorphismShape) {
  const auto m = data::morphism342();
  const auto p = data::prefix342();
  EXPECT_EQ(p.size(), 84U);
  for (Symbol s = 0; s < 3; ++s) {
    EXPECT_EQ(m.image(s).size(), 342U);
    EXPECT_EQ(m.image(s).substr(0, p.size()), p);
  }
}

TEST(BundledData, DumpListsEverything) {
  const std::string d = data::dump();
  EXPECT_NE(d.find(data::morphism37().digest()), std::string::npos);
  EXPECT_NE(d.find(data::morphism342().digest()), std::string::npos);
  EXPECT_NE(d.find("1100011"), std::string::npos);
}

TEST(DerivedSets, SquareFactors) {
  const auto o = FactorOracle::build(data::morphism37(), data::kAlpha, 300);
  const auto sf = derive_Sf(o);
  EXPECT_EQ(sf.size(), 12U);
  EXPECT_EQ(sf, data::square_factors37());
  for (const auto& f : sf) {
    EXPECT_FALSE(f.contains("0101"));
    EXPECT_FALSE(f.contains("1010"));
  }
}

TEST(DerivedSets, CandidateMorphisms) {
  const auto derived = derive_short_morphisms(data::allowed_square_roots37());
  auto listed = data::short_morphisms();
  std::sort(listed.begin(), listed.end());
  EXPECT_EQ(derived, listed);
}

TEST(Thm2, Passes) {
  const auto r = verify_thm2(data::morphism37());
  EXPECT_TRUE(r.pass);
  ASSERT_EQ(r.stages.size(), 7U);
  EXPECT_EQ(stage(r, "repetition-freeness").counts.at("wordsChecked"), 6358);
  EXPECT_EQ(stage(r, "square-factor-set").counts.at("size"), 12);
  EXPECT_EQ(stage(r, "candidate-morphisms").counts.at("size"), 10);
  EXPECT_EQ(stage(r, "image-checks").counts.at("checked"), 120);
  EXPECT_EQ(stage(r, "image-checks").counts.at("blocked"), 120);
  EXPECT_FALSE(r.failed_stage());
}

TEST(Thm2, MutatedMorphismFails) {
  const auto r = verify_thm2(flip_bit(data::morphism37(), 0, 0));
  EXPECT_FALSE(r.pass);
  ASSERT_NE(r.failed_stage(), nullptr);
  EXPECT_EQ(r.failed_stage()->name, r.stages.back().name);  // stops at the first failure
  EXPECT_FALSE(r.failed_stage()->counterexample.empty());
}

TEST(Thm2, EveryStageOfAMutantIsRecordedWhenKeepingGoing) {
  const auto r = verify_thm2(flip_bit(data::morphism37(), 0, 0), {.keep_going = true});
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.stages.size(), 7U);
}

TEST(Thm4, StopsAtTheSynchronizationHypothesis) {
  const auto r = verify_thm4(data::morphism342());
  EXPECT_FALSE(r.pass);
  ASSERT_NE(r.failed_stage(), nullptr);
  const auto& s = *r.failed_stage();
  EXPECT_EQ(s.name, "repetition-freeness");
  ASSERT_EQ(s.counterexample.size(), 1U);
  EXPECT_NE(s.counterexample.front().find("not synchronizing"), std::string::npos);
  EXPECT_EQ(s.counts.at("premisePass"), 1);
  EXPECT_EQ(s.counts.at("premiseWordsChecked"), 10600);
  EXPECT_TRUE(stage(r, "morphism-shape").pass);
  EXPECT_TRUE(stage(r, "forbidden-factors").pass);
}

TEST(Thm4, RemainingStagesPass) {
  const auto r = verify_thm4(data::morphism342(), {.keep_going = true});
  EXPECT_FALSE(r.pass);
  for (const auto& s : r.stages) {
    if (s.name != "repetition-freeness") {
      EXPECT_TRUE(s.pass) << s.name;
    }
  }
  EXPECT_EQ(stage(r, "square-inventory").counts.at("roots"), 873);
  EXPECT_EQ(stage(r, "non-imaged").counts.at("notImaged"), 7);
  EXPECT_EQ(stage(r, "avoiding-set").counts.at("size"), 36);
  EXPECT_EQ(stage(r, "avoiding-set").counts.at("forbidden"), 12);
  EXPECT_EQ(stage(r, "imaged-witnesses").counts.at("witnessed"), 36);
}

TEST(Thm4, WrongWidthFailsFirstStage) {
  const auto r = verify_thm4(data::morphism37());
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.stages.size(), 1U);
  EXPECT_EQ(r.stages.front().name, "morphism-shape");
}

TEST(Reports, Json) {
  const auto r = verify_thm5(10);
  const auto j = nlohmann::json::parse(r.to_json());
  EXPECT_EQ(j["theorem"], "thm5");
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["stages"][0]["name"], "exhaustive-search");
  EXPECT_EQ(j["nodesVisited"], 58);
  EXPECT_EQ(j["maxDepth"], 9);
  EXPECT_TRUE(j.contains("elapsedMs"));
  EXPECT_EQ(j["version"], version());

  const auto untimed = nlohmann::json::parse(r.to_json(false));
  EXPECT_FALSE(untimed.contains("elapsedMs"));
  EXPECT_EQ(r.to_json(false), verify_thm5(10).to_json(false));
}
