#include "imaged/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <iterator>

#include "imaged/imaged.hpp"
#include "imaged/data.hpp"
#include "imaged/repetition.hpp"
#include "imaged/transfer.hpp"

namespace imaged {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string show(const Word& w) { return w.empty() ? "ε" : w.str(); }

// Runs stages in order until one fails; exceptions fail the stage.
class Pipeline {
 public:
  Pipeline(std::string theorem, bool keep_going) : start_(Clock::now()), keep_going_(keep_going) {
    report_.theorem = std::move(theorem);
  }

  template <typename Fn>
  bool stage(const std::string& name, Fn&& fn) {
    if (failed_ && !keep_going_) {
      return false;
    }
    Stage s;
    s.name = name;
    const auto t0 = Clock::now();
    try {
      fn(s);
    } catch (const std::exception& e) {
      s.pass = false;
      s.detail = e.what();
    }
    s.elapsed_ms = ms_since(t0);
    const bool ok = s.pass;
    failed_ = failed_ || !ok;
    report_.stages.push_back(std::move(s));
    return ok;
  }

  Report finish() {
    report_.pass = !failed_ && !report_.stages.empty();
    report_.elapsed_ms = ms_since(start_);
    return std::move(report_);
  }

  Report& report() { return report_; }

 private:
  Report report_;
  Clock::time_point start_;
  bool keep_going_ = false;
  bool failed_ = false;
};

// Elements of `actual` missing from `expected` as "+w", the reverse as "-w".
std::vector<std::string> set_difference_view(const WordSet& actual, const WordSet& expected) {
  std::vector<std::string> out;
  for (const auto& w : actual) {
    if (!expected.contains(w)) {
      out.push_back("+" + show(w));
    }
  }
  for (const auto& w : expected) {
    if (!actual.contains(w)) {
      out.push_back("-" + show(w));
    }
  }
  return out;
}

void record_transfer(Stage& s, const TransferReport& t) {
  s.counts["wordsChecked"] = static_cast<std::int64_t>(t.words_checked);
  s.counts["maxPreimageLength"] = static_cast<std::int64_t>(t.max_length);
  s.detail = "bound " + t.bound.str();
  if (t.counterexample) {
    const auto& w = t.counterexample->witness;
    s.counterexample = {t.counterexample->preimage.str(), "start=" + std::to_string(w.start) +
                                                              " period=" + std::to_string(w.period) +
                                                              " length=" + std::to_string(w.length)};
  }
}

// Lemma check; on a failed hypothesis the premise is still evaluated at the
// same length bound and reported, but the stage fails.
bool transfer_stage(Stage& s, const Morphism& m, const Rational& beta, std::size_t n, unsigned threads) {
  try {
    const auto t = verify_transfer(m, data::kAlpha, beta, n, threads);
    record_transfer(s, t);
    return t.pass;
  } catch (const HypothesisError& e) {
    s.counterexample = {e.what()};
    const auto q = uniform_width(m);
    if (q && *q > 0) {
      const Rational bound = sync_bound(data::kAlpha, beta, *q);
      const auto premise = check_images_free(m, data::kAlpha, beta, n, longest_length_below(bound), threads);
      s.counts["premiseWordsChecked"] = static_cast<std::int64_t>(premise.words_checked);
      s.counts["premisePass"] = premise.pass ? 1 : 0;
      s.detail = "hypothesis failed; premise evaluated up to bound " + bound.str() + " for diagnosis only";
    }
    return false;
  }
}

}  // namespace

WordSet derive_Sf(const FactorOracle& o) {
  WordSet out;
  for (const auto& f : o.factors_of_length(7)) {
    if (f.contains(std::string_view("00")) && f.contains(std::string_view("11")) &&
        !f.contains(std::string_view("0101")) && !f.contains(std::string_view("1010"))) {
      out.insert(f);
    }
  }
  return out;
}

std::vector<Morphism> derive_short_morphisms(const WordSet& roots) {
  std::vector<Morphism> out;
  for (const auto& a : roots) {
    for (const auto& b : roots) {
      if (a == b) {
        continue;
      }
      Morphism m({a, b}, Alphabet::binary());
      const auto flags = classify(m);
      if (flags.admissible && !flags.complementary) {
        out.push_back(std::move(m));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Report verify_thm2(const Morphism& m37, const Thm2Options& opts) {
  Pipeline p("thm2", opts.keep_going);
  std::optional<FactorOracle> oracle;
  WordSet roots;
  WordSet sf;
  std::vector<Morphism> sm;
  const WordSet forbidden = data::forbidden37();

  p.stage("forbidden-factors", [&](Stage& s) {
    oracle.emplace(FactorOracle::build(m37, data::kAlpha, opts.oracle_cap));
    s.counts["windowLength"] = static_cast<std::int64_t>(oracle.value().window());
    s.counts["windows"] = static_cast<std::int64_t>(oracle.value().window_count());
    const auto check = check_avoids(oracle.value(), forbidden);
    s.pass = check.pass();
    for (const auto& w : check.counterexample) {
      s.counterexample.push_back(w.str());
    }
  });
  p.stage("repetition-freeness", [&](Stage& s) {
    const bool transfer_ok = transfer_stage(s, m37, data::kBeta37, data::kMinPeriod37, opts.threads);
    const auto inventory = square_roots(oracle.value(), 2);
    roots = inventory.all();
    s.counts["squareRoots"] = static_cast<std::int64_t>(roots.size());
    const auto diff = set_difference_view(roots, data::allowed_square_roots37());
    s.pass = transfer_ok && diff.empty();
    if (transfer_ok && !diff.empty()) {
      s.counterexample = diff;
    }
  });
  p.stage("complement-pairs", [&](Stage& s) {
    const auto check = check_no_complement_pairs(oracle.value(), 7);
    s.counts["factors7"] = static_cast<std::int64_t>(oracle.value().factors_of_length(7).size());
    s.pass = check.pass();
    for (const auto& w : check.counterexample) {
      s.counterexample.push_back(w.str());
    }
  });
  p.stage("length-7-cover", [&](Stage& s) {
    const auto check = check_length_cover(oracle.value(), 7, data::cover37());
    s.pass = check.pass();
    for (const auto& w : check.counterexample) {
      s.counterexample.push_back(w.str());
    }
  });
  p.stage("square-factor-set", [&](Stage& s) {
    sf = derive_Sf(oracle.value());
    s.counts["size"] = static_cast<std::int64_t>(sf.size());
    s.counterexample = set_difference_view(sf, data::square_factors37());
    s.pass = s.counterexample.empty();
  });
  p.stage("candidate-morphisms", [&](Stage& s) {
    sm = derive_short_morphisms(roots);
    auto listed = data::short_morphisms();
    std::sort(listed.begin(), listed.end());
    s.counts["size"] = static_cast<std::int64_t>(sm.size());
    s.counts["admissible"] = std::count_if(listed.begin(), listed.end(), [](const Morphism& m) {
      const auto f = classify(m);
      return f.admissible && !f.identity && !f.complementary;
    });
    for (const auto& m : sm) {
      if (!std::binary_search(listed.begin(), listed.end(), m)) {
        s.counterexample.push_back("+" + m.compact());
      }
    }
    for (const auto& m : listed) {
      if (!std::binary_search(sm.begin(), sm.end(), m)) {
        s.counterexample.push_back("-" + m.compact());
      }
    }
    s.pass = s.counterexample.empty() && s.counts["admissible"] == static_cast<std::int64_t>(listed.size());
  });
  p.stage("image-checks", [&](Stage& s) {
    std::int64_t checked = 0;
    std::int64_t blocked = 0;
    for (const auto& m : sm) {
      for (const auto& f : sf) {
        ++checked;
        const Word image = apply(m, f);
        const bool hit = std::any_of(forbidden.begin(), forbidden.end(),
                                     [&](const Word& bad) { return image.contains(bad); });
        if (hit) {
          ++blocked;
        } else if (s.counterexample.empty()) {
          s.counterexample = {m.compact(), f.str(), image.str()};
        }
      }
    }
    s.counts["checked"] = checked;
    s.counts["blocked"] = blocked;
    s.pass = checked == blocked && checked > 0;
  });
  return p.finish();
}

Report verify_thm4(const Morphism& m342, const Thm4Options& opts) {
  Pipeline p("thm4", opts.keep_going);
  std::optional<FactorOracle> oracle;
  std::optional<SquareInventory> inventory;

  p.stage("morphism-shape", [&](Stage& s) {
    const auto q = uniform_width(m342);
    s.counts["width"] = q ? static_cast<std::int64_t>(*q) : -1;
    const std::string prefix = data::prefix342().str();
    std::int64_t sharing = 0;
    for (const auto& image : m342.images()) {
      sharing += image.str().starts_with(prefix) ? 1 : 0;
    }
    s.counts["imagesWithPrefix"] = sharing;
    s.pass = q && *q == 342 && sharing == m342.source().size();
    if (!s.pass) {
      s.detail = "expected three 342-uniform images sharing the published prefix";
    }
  });
  p.stage("forbidden-factors", [&](Stage& s) {
    oracle.emplace(FactorOracle::build(m342, data::kAlpha, opts.oracle_cap));
    s.counts["windowLength"] = static_cast<std::int64_t>(oracle.value().window());
    s.counts["windows"] = static_cast<std::int64_t>(oracle.value().window_count());
    const auto check = check_avoids(oracle.value(), data::forbidden342());
    s.pass = check.pass();
    for (const auto& w : check.counterexample) {
      s.counterexample.push_back(w.str());
    }
  });
  p.stage("repetition-freeness", [&](Stage& s) {
    s.pass = transfer_stage(s, m342, data::kBeta342, data::kMinPeriod342, opts.threads);
  });
  p.stage("square-inventory", [&](Stage& s) {
    inventory.emplace(square_roots(oracle.value(), opts.image_bound));
    s.counts["roots"] = static_cast<std::int64_t>(inventory.value().size());
    s.counts["maxPeriod"] = static_cast<std::int64_t>(opts.image_bound);
    s.counts["longestRoot"] =
        inventory.value().by_length.empty() ? 0 : static_cast<std::int64_t>(inventory.value().by_length.rbegin()->first);
    s.pass = inventory.value().contains(Word("0")) && inventory.value().contains(Word("1"));
  });
  p.stage("non-imaged", [&](Stage& s) {
    const auto t = data::non_imaged342();
    std::int64_t clean = 0;
    for (const auto& word : t) {
      if (!oracle.value().is_factor(word)) {
        s.counterexample.push_back(word.str() + " is not a factor");
        continue;
      }
      if (auto found = imaged_in_oracle(word, oracle.value(), inventory.value())) {
        s.counterexample.push_back(word.str() + " imaged by " + found->morphism->compact());
        continue;
      }
      ++clean;
    }
    s.counts["words"] = static_cast<std::int64_t>(t.size());
    s.counts["notImaged"] = clean;
    s.pass = clean == static_cast<std::int64_t>(t.size());
  });
  WordSet avoiding;
  p.stage("avoiding-set", [&](Stage& s) {
    const WordSet forbidden = data::forbidden_or_non_imaged342();
    s.counts["forbidden"] = static_cast<std::int64_t>(forbidden.size());
    avoiding = enumerate_avoiding(forbidden, 10);
    s.counts["size"] = static_cast<std::int64_t>(avoiding.size());
    s.counterexample = set_difference_view(avoiding, data::imaged_candidates342());
    s.pass = s.counterexample.empty() && forbidden.size() == 12;
  });
  if (opts.witnesses) {
    p.stage("imaged-witnesses", [&](Stage& s) {
      const WordSet short_factors = oracle.value().factors_up_to(opts.witness_image_cap);
      const std::vector<Word> short_pool(short_factors.begin(), short_factors.end());
      std::vector<Word> root_pool;
      for (const auto& [len, bucket] : inventory.value().by_length) {
        root_pool.insert(root_pool.end(), bucket.begin(), bucket.end());
      }
      std::int64_t found = 0;
      std::int64_t morphic = 0;
      for (const auto& f : avoiding) {
        if (!oracle.value().is_factor(f)) {
          s.counterexample.push_back(show(f) + " is not a factor");
          continue;
        }
        if (f.letters_used() < 2) {
          ++found;
          continue;
        }
        const bool square0 = f.contains(std::string_view("00"));
        const bool square1 = f.contains(std::string_view("11"));
        auto w = find_oracle_image(f, oracle.value(), square0 ? root_pool : short_pool, square1 ? root_pool : short_pool);
        if (w) {
          ++found;
          ++morphic;
        } else {
          s.counterexample.push_back(show(f) + " has no witness within the search bounds");
        }
      }
      s.counts["witnessed"] = found;
      s.counts["morphic"] = morphic;
      s.pass = found == static_cast<std::int64_t>(avoiding.size());
    });
  }
  return p.finish();
}

Report verify_thm3(const std::vector<Word>& patterns, const SearchConfig& cfg) {
  Pipeline p("thm3", false);
  p.stage("backtrack", [&](Stage& s) {
    const auto r = thm3_search(patterns, cfg);
    s.counts["nodesVisited"] = static_cast<std::int64_t>(r.nodes_visited);
    s.counts["maxDepth"] = static_cast<std::int64_t>(r.max_depth);
    s.counts["patterns"] = static_cast<std::int64_t>(patterns.size());
    s.detail = to_string(r.outcome);
    s.pass = r.tree_finite();
    if (!s.pass) {
      s.counterexample = {r.deepest_word.str()};
    }
    p.report().search = r;
  });
  return p.finish();
}

Report verify_thm5(std::size_t target, const SearchConfig& cfg) {
  Pipeline p("thm5", false);
  p.stage("exhaustive-search", [&](Stage& s) {
    const auto r = thm5_search(target, cfg);
    s.counts["target"] = static_cast<std::int64_t>(target);
    s.counts["nodesVisited"] = static_cast<std::int64_t>(r.nodes_visited);
    s.counts["maxDepth"] = static_cast<std::int64_t>(r.max_depth);
    s.detail = to_string(r.outcome);
    s.pass = r.tree_finite();
    if (!s.pass) {
      s.counterexample = {r.deepest_word.str()};
    }
    p.report().search = r;
  });
  return p.finish();
}

}  // namespace imaged
