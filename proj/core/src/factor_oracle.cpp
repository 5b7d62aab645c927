#include "imaged/factor_oracle.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "imaged/repetition.hpp"

namespace imaged {

namespace {

std::size_t window_for(std::size_t max_len, std::size_t q) { return (max_len + q - 1) / q + 1; }

std::string cache_key(const Morphism& m, const Rational& alpha, std::size_t window) {
  return "# imaged-window-cache digest=" + m.digest() + " alpha=" + alpha.str() + " window=" + std::to_string(window);
}

}  // namespace

FactorOracle::FactorOracle(Morphism m, Rational alpha, std::size_t max_len, std::size_t window)
    : morphism_(std::move(m)), alpha_(alpha), max_len_(max_len), window_(window) {}

FactorOracle FactorOracle::build(const Morphism& m, const Rational& alpha, std::size_t max_len) {
  const auto q = uniform_width(m);
  if (!q || *q == 0) {
    throw std::invalid_argument("factor oracle: morphism must be uniform and non-erasing");
  }
  if (!(Rational(1) < alpha && alpha < Rational(2))) {
    throw std::invalid_argument("factor oracle: alpha must lie in (1, 2)");
  }
  FactorOracle o(m, alpha, max_len, window_for(max_len, *q));
  WordSet windows = enumerate_free(m.source(), alpha, o.window_);
  if (windows.empty()) {
    throw std::runtime_error("factor oracle: no " + alpha.str() + "+-free pre-image of length " +
                             std::to_string(o.window_));
  }
  o.index(std::vector<Word>(windows.begin(), windows.end()));
  return o;
}

void FactorOracle::index(std::vector<Word> preimages) {
  std::unordered_set<std::string> seen;
  for (auto& y : preimages) {
    std::string image = apply(morphism_, y).str();
    if (!seen.insert(image).second) {
      continue;
    }
    if (!text_.empty()) {
      text_.push_back('#');
    }
    starts_.push_back(text_.size());
    text_ += image;
    preimages_.push_back(std::move(y));
  }
  automaton_.reserve(text_.size());
  for (char c : text_) {
    automaton_.extend(c);
  }
}

FactorOracle FactorOracle::load_windows(const Morphism& m, const Rational& alpha, std::size_t max_len,
                                        const std::string& path) {
  const auto q = uniform_width(m);
  if (!q || *q == 0) {
    throw std::invalid_argument("factor oracle: morphism must be uniform and non-erasing");
  }
  FactorOracle o(m, alpha, max_len, window_for(max_len, *q));
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open window cache " + path);
  }
  std::string line;
  if (!std::getline(in, line) || line != cache_key(m, alpha, o.window_)) {
    throw std::runtime_error("window cache " + path + " does not match this morphism, alpha and window");
  }
  std::vector<Word> preimages;
  while (std::getline(in, line)) {
    if (line.empty()) {
      continue;
    }
    std::istringstream fields(line);
    std::string image;
    std::string preimage;
    fields >> image >> preimage;
    Word y(preimage, m.source());
    if (y.size() != o.window_ || apply(m, y).str() != image || !is_free(y, alpha)) {
      throw std::runtime_error("window cache " + path + ": inconsistent entry '" + line + "'");
    }
    preimages.push_back(std::move(y));
  }
  if (preimages.empty()) {
    throw std::runtime_error("window cache " + path + " is empty");
  }
  o.index(std::move(preimages));
  return o;
}

void FactorOracle::save_windows(const std::string& path) const {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write window cache " + path);
  }
  out << cache_key(morphism_, alpha_, window_) << '\n';
  const auto images = window_images();
  for (std::size_t i = 0; i < images.size(); ++i) {
    out << images[i] << ' ' << preimages_[i].str() << '\n';
  }
}

std::vector<std::string> FactorOracle::window_images() const {
  std::vector<std::string> out;
  out.reserve(starts_.size());
  for (std::size_t i = 0; i < starts_.size(); ++i) {
    const std::size_t end = i + 1 < starts_.size() ? starts_[i + 1] - 1 : text_.size();
    out.push_back(text_.substr(starts_[i], end - starts_[i]));
  }
  return out;
}

void FactorOracle::check_length(std::size_t length) const {
  if (length > max_len_) {
    throw std::out_of_range("factor oracle: query of length " + std::to_string(length) + " exceeds max_len " +
                            std::to_string(max_len_));
  }
}

bool FactorOracle::is_factor(std::string_view v) const {
  check_length(v.size());
  return automaton_.contains(v);
}

bool FactorOracle::is_factor(const Word& v) const { return is_factor(v.view()); }

std::optional<OracleWitness> FactorOracle::witness(const Word& v) const {
  check_length(v.size());
  const auto s = automaton_.walk(SuffixAutomaton::kRoot, v.view());
  if (s == SuffixAutomaton::kNone) {
    return std::nullopt;
  }
  const std::size_t start = automaton_.first_end(s) - v.size();
  const auto it = std::upper_bound(starts_.begin(), starts_.end(), start);
  const auto idx = static_cast<std::size_t>(it - starts_.begin()) - 1;
  return OracleWitness{preimages_[idx], start - starts_[idx]};
}

FactorOracle::Cursor FactorOracle::advance(Cursor c, std::string_view text) const {
  if (!c.alive()) {
    return c;
  }
  c.length += text.size();
  if (c.length > max_len_) {
    throw std::out_of_range("factor oracle: incremental query exceeds max_len " + std::to_string(max_len_));
  }
  c.state = automaton_.walk(c.state, text);
  return c;
}

WordSet FactorOracle::factors_of_length(std::size_t length) const {
  check_length(length);
  std::set<std::string> found;
  for (const auto& image : window_images()) {
    for (std::size_t i = 0; i + length <= image.size(); ++i) {
      found.insert(image.substr(i, length));
    }
  }
  WordSet out;
  for (const auto& f : found) {
    out.emplace(f, morphism_.target());
  }
  return out;
}

WordSet FactorOracle::factors_up_to(std::size_t max_length) const {
  check_length(max_length);
  WordSet out;
  std::string current;
  const char last_symbol = static_cast<char>('0' + morphism_.target().size() - 1);
  auto dfs = [&](auto&& self, SuffixAutomaton::State s) -> void {
    if (!current.empty()) {
      out.emplace(current, morphism_.target());
    }
    if (current.size() == max_length) {
      return;
    }
    for (char c = '0'; c <= last_symbol; ++c) {
      const auto next = automaton_.step(s, c);
      if (next != SuffixAutomaton::kNone) {
        current.push_back(c);
        self(self, next);
        current.pop_back();
      }
    }
  };
  dfs(dfs, SuffixAutomaton::kRoot);
  return out;
}

std::size_t SquareInventory::size() const {
  std::size_t n = 0;
  for (const auto& [len, roots] : by_length) {
    n += roots.size();
  }
  return n;
}

bool SquareInventory::contains(const Word& u) const {
  const auto it = by_length.find(u.size());
  return it != by_length.end() && it->second.contains(u);
}

WordSet SquareInventory::all() const {
  WordSet out;
  for (const auto& [len, roots] : by_length) {
    out.insert(roots.begin(), roots.end());
  }
  return out;
}

SquareInventory square_roots(const FactorOracle& o, std::size_t max_period) {
  if (2 * max_period > o.max_len()) {
    throw std::out_of_range("square_roots: 2 * max_period exceeds the oracle cap");
  }
  SquareInventory inv;
  inv.max_period = max_period;
  std::vector<std::set<std::string>> roots(max_period + 1);
  for (const auto& image : o.window_images()) {
    const std::size_t n = image.size();
    for (std::size_t p = 1; p <= max_period && 2 * p <= n; ++p) {
      // run = number of consecutive matches image[j] == image[j + p] ending at j
      std::size_t run = 0;
      for (std::size_t j = 0; j + p < n; ++j) {
        run = image[j] == image[j + p] ? run + 1 : 0;
        if (run >= p) {
          roots[p].insert(image.substr(j + 1 - p, p));
        }
      }
    }
  }
  for (std::size_t p = 1; p <= max_period; ++p) {
    if (roots[p].empty()) {
      continue;
    }
    auto& bucket = inv.by_length[p];
    for (const auto& r : roots[p]) {
      bucket.emplace(r, o.morphism().target());
    }
  }
  return inv;
}

CheckResult check_avoids(const FactorOracle& o, const WordSet& forbidden) {
  for (const auto& f : forbidden) {
    if (o.is_factor(f)) {
      return CheckResult{{f}};
    }
  }
  return {};
}

CheckResult check_no_complement_pairs(const FactorOracle& o, std::size_t length) {
  const WordSet factors = o.factors_of_length(length);
  for (const auto& f : factors) {
    Word bar = complement(f);
    if (factors.contains(bar)) {
      return CheckResult{{f, std::move(bar)}};
    }
  }
  return {};
}

bool satisfies(const Word& w, const CoverRequirement& requirement) {
  return std::any_of(requirement.begin(), requirement.end(), [&](const std::vector<Word>& clause) {
    return std::all_of(clause.begin(), clause.end(), [&](const Word& part) { return w.contains(part); });
  });
}

CheckResult check_length_cover(const FactorOracle& o, std::size_t length, const CoverRequirement& requirement) {
  for (const auto& f : o.factors_of_length(length)) {
    if (!satisfies(f, requirement)) {
      return CheckResult{{f}};
    }
  }
  return {};
}

}  // namespace imaged
