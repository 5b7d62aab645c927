#include "imaged/search.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <stdexcept>

#include "imaged/parallel.hpp"

namespace imaged {

const char* to_string(SearchReport::Outcome outcome) {
  return outcome == SearchReport::Outcome::TreeFinite ? "tree-finite" : "depth-cap-exceeded";
}

namespace {

void note_depth(SearchReport& r, const std::string& word) {
  if (word.size() > r.max_depth || (word.size() == r.max_depth && word < r.deepest_word.str())) {
    r.max_depth = word.size();
    r.deepest_word = Word(word);
  }
}

void merge_into(SearchReport& total, const SearchReport& part) {
  total.nodes_visited += part.nodes_visited;
  total.cap_hits += part.cap_hits;
  for (const auto& [rule, n] : part.rule_fires) {
    total.rule_fires[rule] += n;
  }
  if (part.nodes_visited > 0) {
    note_depth(total, part.deepest_word.str());
  }
}

// Policy: State root(); State child(const State&, char); const std::string& word(const State&);
// const char* prune(const State&) (nullptr when the node survives).
template <typename Policy>
class TreeSearch {
 public:
  using State = typename Policy::State;

  TreeSearch(const Policy& policy, const SearchConfig& cfg) : policy_(policy), cfg_(cfg) {
    if (cfg.depth_cap && *cfg.depth_cap < 1) {
      throw std::invalid_argument("search: depth cap must be at least 1");
    }
  }

  SearchReport run() {
    SearchReport top;
    std::vector<State> units;
    collect(policy_.root(), top, units);

    std::vector<SearchReport> parts(units.size());
    std::atomic<std::size_t> done{0};
    std::mutex progress_mutex;
    parallel_for(units.size(), cfg_.threads, [&](std::size_t i) {
      visit(units[i], parts[i]);
      const std::size_t finished = ++done;
      if (cfg_.progress) {
        std::lock_guard lock(progress_mutex);
        cfg_.progress(finished, units.size());
      }
    });
    for (const auto& part : parts) {
      merge_into(top, part);
    }
    top.outcome = top.cap_hits > 0 ? SearchReport::Outcome::DepthCapExceeded : SearchReport::Outcome::TreeFinite;
    return top;
  }

 private:
  // Returns true when the node's children should be explored.
  bool examine(const State& s, SearchReport& r) const {
    const std::string& w = policy_.word(s);
    ++r.nodes_visited;
    note_depth(r, w);
    if (const char* fired = policy_.prune(s)) {
      ++r.rule_fires[fired];
      return false;
    }
    if (cfg_.depth_cap && w.size() >= *cfg_.depth_cap) {
      ++r.cap_hits;
      return false;
    }
    return true;
  }

  template <typename Fn>
  void for_children(const State& s, Fn&& fn) const {
    const bool root = policy_.word(s).empty();
    for (char c : {'0', '1'}) {
      if (root && cfg_.first_letter_fixed && c == '1') {
        continue;
      }
      fn(policy_.child(s, c));
    }
  }

  void collect(const State& s, SearchReport& r, std::vector<State>& units) const {
    if (policy_.word(s).size() == cfg_.split_depth) {
      units.push_back(s);
      return;
    }
    if (examine(s, r)) {
      for_children(s, [&](State child) { collect(child, r, units); });
    }
  }

  void visit(const State& s, SearchReport& r) const {
    if (examine(s, r)) {
      for_children(s, [&](State child) { visit(child, r); });
    }
  }

  const Policy& policy_;
  const SearchConfig& cfg_;
};

bool ends_with_run(const std::string& w, std::size_t run) {
  if (w.size() < run) {
    return false;
  }
  const char last = w.back();
  return std::all_of(w.end() - static_cast<std::ptrdiff_t>(run), w.end(), [&](char c) { return c == last; });
}

class LengthSixPolicy {
 public:
  using State = std::string;

  LengthSixPolicy(const std::vector<Word>& patterns, unsigned rules) : rules_(rules) {
    for (const auto& f : patterns) {
      patterns_.emplace_back(f);
      complements_.push_back(complement(f));
    }
  }

  State root() const { return {}; }
  State child(const State& s, char c) const { return s + c; }
  const std::string& word(const State& s) const { return s; }

  const char* prune(const State& s) const {
    const auto rule = backtrack_rule(s, patterns_, complements_, rules_);
    if (!rule) {
      return nullptr;
    }
    switch (*rule) {
      case kRuleRun:
        return kFireRun;
      case kRuleComplement:
        return kFireComplement;
      default:
        return kFireImage;
    }
  }

 private:
  unsigned rules_;
  std::vector<ImagePattern> patterns_;
  std::vector<Word> complements_;
};

class CertifiedCountPolicy {
 public:
  using State = CertifiedImaged;

  explicit CertifiedCountPolicy(std::size_t target) : target_(target) {}

  State root() const { return CertifiedImaged(target_); }
  State child(const State& s, char c) const {
    State next = s;
    next.append(c);
    return next;
  }
  const std::string& word(const State& s) const { return s.word(); }
  const char* prune(const State& s) const { return s.count() >= target_ ? kFireTarget : nullptr; }

 private:
  std::size_t target_;
};

}  // namespace

std::optional<Rule> backtrack_rule(const std::string& word, const std::vector<ImagePattern>& patterns,
                                   const std::vector<Word>& complements, unsigned rules) {
  if ((rules & kRuleRun) && ends_with_run(word, 4)) {
    return kRuleRun;
  }
  if ((rules & kRuleComplement) && word.size() >= 6) {
    std::string bar = word.substr(word.size() - 6);
    for (char& c : bar) {
      c = c == '0' ? '1' : '0';
    }
    if (word.find(bar) != std::string::npos) {
      return kRuleComplement;
    }
  }
  if (rules & kRuleImage) {
    for (std::size_t i = 0; i < patterns.size(); ++i) {
      const auto& f = patterns[i].word().str();
      if (word.find(f) == std::string::npos && word.find(complements[i].str()) == std::string::npos) {
        continue;
      }
      if (patterns[i].suffix_image(word, 3)) {
        return kRuleImage;
      }
    }
  }
  return std::nullopt;
}

SearchReport thm3_search(const std::vector<Word>& patterns, const SearchConfig& cfg) {
  const LengthSixPolicy policy(patterns, cfg.rules);
  return TreeSearch<LengthSixPolicy>(policy, cfg).run();
}

CertifiedImaged::CertifiedImaged(std::size_t stop_at) : stop_at_(stop_at) { certified_.insert(""); }

bool CertifiedImaged::witnessed(const std::string& f, const std::string& previous) const {
  if (f.find('0') == std::string::npos || f.find('1') == std::string::npos) {
    return true;
  }
  const ImagePattern pattern{Word(f)};
  if (previous.find(f) != std::string::npos) {
    // f had no witness inside the previous word, so any witness is a suffix.
    return pattern.suffix_image(word_, 2).has_value();
  }
  return pattern.find_image(word_).has_value();
}

void CertifiedImaged::append(char letter) {
  const std::string previous = word_;
  word_.push_back(letter);
  if (certified_.size() >= stop_at_) {
    return;
  }
  std::set<std::string> tested;
  std::deque<std::string> queue(certified_.begin(), certified_.end());
  while (!queue.empty() && certified_.size() < stop_at_) {
    const std::string base = std::move(queue.front());
    queue.pop_front();
    for (char c : {'0', '1'}) {
      for (const std::string& f : {base + c, c + base}) {
        if (certified_.contains(f) || tested.contains(f)) {
          continue;
        }
        // Every factor of an imaged word is imaged, so both maximal proper
        // factors must already be certified.
        if (!certified_.contains(f.substr(1)) || !certified_.contains(f.substr(0, f.size() - 1))) {
          continue;
        }
        tested.insert(f);
        if (word_.find(f) == std::string::npos || !witnessed(f, previous)) {
          continue;
        }
        certified_.insert(f);
        queue.push_back(f);
        if (certified_.size() >= stop_at_) {
          return;
        }
      }
    }
  }
}

std::size_t certified_imaged_count(const Word& w) {
  std::set<std::string> imaged;
  for (std::size_t len = 0; len <= w.size(); ++len) {
    for (const auto& f : factor_set(w, len)) {
      if (imaged_in_finite(f, w)) {
        imaged.insert(f.str());
      }
    }
  }
  return imaged.size();
}

SearchReport thm5_search(std::size_t target, const SearchConfig& cfg) {
  if (target < 1) {
    throw std::invalid_argument("thm5_search: target must be at least 1");
  }
  const CertifiedCountPolicy policy(target);
  return TreeSearch<CertifiedCountPolicy>(policy, cfg).run();
}

SquareBoundResult max_word_without_big_squares(std::size_t min_period, std::size_t depth_cap) {
  if (min_period < 1) {
    throw std::invalid_argument("max_word_without_big_squares: minimal period must be at least 1");
  }
  SquareBoundResult result;
  std::string w;
  auto square_at_end = [&] {
    const std::size_t n = w.size();
    for (std::size_t p = min_period; 2 * p <= n; ++p) {
      if (w.compare(n - 2 * p, p, w, n - p, p) == 0) {
        return true;
      }
    }
    return false;
  };
  std::function<void()> extend = [&] {
    if (result.reached_cap) {
      return;
    }
    if (w.size() > result.max_length) {
      result.max_length = w.size();
      result.witnesses.clear();
    }
    if (w.size() == result.max_length) {
      result.witnesses.emplace_back(w);
    }
    if (w.size() >= depth_cap) {
      result.reached_cap = true;
      return;
    }
    for (char c : {'0', '1'}) {
      w.push_back(c);
      if (!square_at_end()) {
        extend();
      }
      w.pop_back();
    }
  };
  extend();
  return result;
}

}  // namespace imaged
