// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.
#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "imaged/factor_oracle.hpp"
#include "imaged/imaged.hpp"
#include "imaged/data.hpp"
#include "imaged/repetition.hpp"
#include "imaged/search.hpp"
#include "imaged/theorems.hpp"
#include "imaged/transfer.hpp"

using namespace imaged;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  // Records a sub-check; the criterion fails if any sub-check fails.
  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

struct Run {
  int code = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(IMAGED_CLI) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    return r;
  }
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    r.out.append(buf.data(), n);
  }
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

int failures = 0;

void criterion(int id, const std::string& name, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail << "[exception: " << e.what() << "] ";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) {
    ++failures;
  }
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.1fs", secs);
  std::cout << (o.pass ? "PASS" : "FAIL") << " " << id << " " << name << " (" << timing << ") " << o.detail.str()
            << std::endl;
}

const FactorOracle& oracle37() {
  static const FactorOracle o = FactorOracle::build(data::morphism37(), data::kAlpha, 300);
  return o;
}

const FactorOracle& oracle342() {
  static const FactorOracle o = FactorOracle::build(data::morphism342(), data::kAlpha, 1952);
  return o;
}

}  // namespace

int main() {
  criterion(1, "lemma-sync on the 37-uniform morphism", [](Outcome& o) {
    const auto r = verify_transfer(data::morphism37(), data::kAlpha, Rational(289, 148), 3);
    o.check(r.pass, "transfer check");
    o.check(r.bound == Rational(289, 15), "bound 289/15");
    o.check(r.max_length == 19, "max length 19");
    std::size_t free_words = 0;
    for_each_free(Alphabet::ternary(), data::kAlpha, 19, [&](const Word&) { ++free_words; });
    o.check(r.words_checked == free_words, "every free word of length <= 19 checked");
    const auto cli = run_cli("lemma-sync --morphism h37 --alpha 7/4 --beta 289/148 --n 3");
    o.check(cli.code == 0, "cli exit 0");
    o.detail << "bound=" << r.bound << " words=" << r.words_checked;
  });

  criterion(2, "language properties of the 37-uniform morphism", [](Outcome& o) {
    const auto& orc = oracle37();
    o.check(check_avoids(orc, data::forbidden37()).pass(), "avoids F");
    o.check(square_roots(orc, 2).all() == data::allowed_square_roots37(), "square roots {0,1,01,10}");
    o.check(check_no_complement_pairs(orc, 7).pass(), "no complement pairs at length 7");
    o.check(check_length_cover(orc, 7, data::cover37()).pass(), "length-7 cover");
  });

  criterion(3, "square-bearing factors and candidate morphisms", [](Outcome& o) {
    const auto sf = derive_Sf(oracle37());
    o.check(sf == data::square_factors37() && sf.size() == 12, "12 listed factors");
    auto listed = data::short_morphisms();
    std::sort(listed.begin(), listed.end());
    const auto derived = derive_short_morphisms(data::allowed_square_roots37());
    o.check(derived == listed && derived.size() == 10, "10 admissible morphisms");
    std::size_t blocked = 0;
    for (const auto& m : derived) {
      for (const auto& f : sf) {
        const Word img = apply(m, f);
        blocked += std::any_of(data::forbidden37().begin(), data::forbidden37().end(),
                               [&](const Word& x) { return img.contains(x); });
      }
    }
    o.check(blocked == 120, "all 120 images contain a forbidden factor");
    const auto cli = run_cli("verify thm2");
    o.check(cli.code == 0, "verify thm2 exit 0");
    o.detail << "blocked=" << blocked << "/120";
  });

  criterion(4, "length-6 backtrack search", [](Outcome& o) {
    const auto l16 = data::backtrack_patterns();
    const auto a = thm3_search(l16);
    o.check(a.tree_finite(), "tree-finite");
    SearchConfig two;
    two.threads = 2;
    o.check(thm3_search(l16, two) == a, "same report with 2 threads");
    o.check(thm3_search(l16) == a, "same report on a second run");
    SearchConfig control;
    control.rules = kRuleRun | kRuleComplement;
    control.depth_cap = 30;
    o.check(!thm3_search(l16, control).tree_finite(), "control without the image rule hits the cap");
    o.detail << "nodes=" << a.nodes_visited << " depth=" << a.max_depth;
  });

  criterion(5, "image parsing identities", [](Outcome& o) {
    const auto parses = parse_as_image(Word("11000011"), Word("100001"));
    o.check(std::find(parses.begin(), parses.end(), Morphism::parse_compact("0/11")) != parses.end(),
            "11000011 parses 100001 by 0->0, 1->11");
    o.check(apply(Morphism::parse_compact("00/1"), Word("000000")) == Word(std::string(12, '0')),
            "0->00 maps 0^6 to 0^12");
  });

  criterion(6, "342-uniform morphism and its lemma-sync", [](Outcome& o) {
    const auto m = data::morphism342();
    o.check(uniform_width(m) == 342U, "width 342");
    const Word p = data::prefix342();
    for (Symbol s = 0; s < 3; ++s) {
      o.check(m.image(s).substr(0, p.size()) == p, "shared prefix");
    }
    const Rational beta(1321, 684);
    o.check(sync_bound(data::kAlpha, beta, 342) == Rational(1321, 62), "bound 1321/62");
    o.check(longest_length_below(Rational(1321, 62)) == 21, "enumeration length 21");
    try {
      const auto r = verify_transfer(m, data::kAlpha, beta, 245);
      o.check(r.pass, "transfer check");
      o.detail << "words=" << r.words_checked;
    } catch (const HypothesisError& e) {
      o.check(false, e.what());
      const auto premise = check_images_free(m, data::kAlpha, beta, 245, 21);
      o.detail << "premise alone " << (premise.pass ? "holds" : "fails") << " for " << premise.words_checked
               << " words ";
    }
    const auto cli = run_cli("lemma-sync --morphism h342 --alpha 7/4 --beta 1321/684 --n 245");
    o.check(cli.code == 0, "cli exit 0");
  });

  criterion(7, "non-imaged words of the 342-uniform language", [](Outcome& o) {
    const auto& orc = oracle342();
    o.check(orc.max_len() >= 1952, "oracle cap >= 1952");
    const auto inv = square_roots(orc, 244);
    std::size_t none = 0;
    for (const auto& t : data::non_imaged342()) {
      const auto w = imaged_in_oracle(t, orc, inv);
      o.check(!w, "no image of " + t.str());
      none += !w;
    }
    o.check(data::non_imaged342().size() == 7, "7 words");
    o.detail << "notImaged=" << none << "/7 roots=" << inv.size();
  });

  criterion(8, "the 36 candidate imaged words", [](Outcome& o) {
    const auto tp = data::forbidden_or_non_imaged342();
    o.check(tp.size() == 12, "|T'| = 12");
    const auto words = enumerate_avoiding(tp, 64);
    o.check(words == data::imaged_candidates342() && words.size() == 36, "36 listed words");
    o.check(words.count(Word("")) == 1, "contains the empty word");
    const auto cli = run_cli("verify thm4 --no-witnesses");
    o.check(cli.code == 0, "verify thm4 exit 0 (got " + std::to_string(cli.code) + ")");
    o.detail << "size=" << words.size();
  });

  criterion(9, "at least 36 imaged factors", [](Outcome& o) {
    const auto a = thm5_search(36);
    o.check(a.tree_finite(), "target 36 tree-finite");
    SearchConfig two;
    two.threads = 2;
    o.check(thm5_search(36, two) == a, "same report with 2 threads");
    const auto root = thm5_search(1);
    o.check(root.tree_finite() && root.nodes_visited == 1, "target 1 prunes at the root");
    o.detail << "nodes=" << a.nodes_visited << " depth=" << a.max_depth;
  });

  criterion(10, "words without long squares", [](Outcome& o) {
    const auto two = max_word_without_big_squares(2);
    const auto one = max_word_without_big_squares(1);
    o.check(!two.reached_cap && two.max_length == 18, "period >= 2 gives 18");
    o.check(!one.reached_cap && one.max_length == 3, "square-free gives 3");
    o.detail << "lengths=" << two.max_length << "," << one.max_length;
  });

  criterion(11, "property suites", [](Outcome& o) {
    const int code = std::system((std::string(IMAGED_PROPERTY_TESTS) + " --gtest_brief=1 >/dev/null 2>&1").c_str());
    o.check(WIFEXITED(code) && WEXITSTATUS(code) == 0, "property tests green");
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
