#include "imaged/repetition.hpp"

#include <algorithm>
#include <deque>

namespace imaged {

std::optional<RepetitionWitness> find_repetition(std::string_view w, const Rational& beta,
                                                 std::size_t min_period) {
  if (beta <= Rational(1)) {
    throw std::invalid_argument("find_repetition: beta must exceed 1");
  }
  if (min_period == 0) {
    throw std::invalid_argument("find_repetition: minimal period must be positive");
  }
  const std::size_t n = w.size();
  for (std::size_t p = min_period; p < n; ++p) {
    std::size_t run = 0;
    for (std::size_t j = p; j <= n; ++j) {
      if (j < n && w[j] == w[j - p]) {
        ++run;
        continue;
      }
      if (run > 0 && exceeds(run + p, p, beta)) {
        return RepetitionWitness{j - run - p, p, run + p};
      }
      run = 0;
    }
  }
  return std::nullopt;
}

std::optional<RepetitionWitness> find_repetition(const Word& w, const Rational& beta, std::size_t min_period) {
  return find_repetition(w.view(), beta, min_period);
}

bool is_free(const Word& w, const Rational& beta, std::size_t min_period) {
  return !find_repetition(w, beta, min_period).has_value();
}

RepetitionTracker::RepetitionTracker(Rational beta, std::size_t min_period)
    : beta_(beta), min_period_(min_period) {
  if (beta_ <= Rational(1)) {
    throw std::invalid_argument("RepetitionTracker: beta must exceed 1");
  }
  if (min_period_ == 0) {
    throw std::invalid_argument("RepetitionTracker: minimal period must be positive");
  }
}

bool RepetitionTracker::push(char symbol) {
  const std::size_t j = text_.size();
  text_.push_back(symbol);
  if (matches_.size() < j + 1) {
    matches_.resize(j + 1, 0);
  }
  matches_[j] = 0;  // period j becomes available
  bool ok = true;
  const char* t = text_.data();
  for (std::size_t p = min_period_; p <= j; ++p) {
    if (t[j] == t[j - p]) {
      const std::uint32_t r = ++matches_[p];
      if (ok && exceeds(r + p, p, beta_)) {
        ok = false;
      }
    } else {
      matches_[p] = 0;
    }
  }
  return ok;
}

bool RepetitionTracker::push(std::string_view block) {
  bool ok = true;
  for (char c : block) {
    ok = push(c) && ok;
  }
  return ok;
}

void RepetitionTracker::checkpoint() {
  saved_.emplace_back(text_.size(), std::vector<std::uint32_t>(matches_.begin(), matches_.begin() +
                                                                  static_cast<std::ptrdiff_t>(text_.size())));
}

void RepetitionTracker::rollback() {
  auto& [len, matches] = saved_.back();
  text_.resize(len);
  std::copy(matches.begin(), matches.end(), matches_.begin());
  saved_.pop_back();
}

PackedRepetitionTracker::PackedRepetitionTracker(Rational beta, std::size_t min_period)
    : beta_(beta), min_period_(min_period) {
  if (beta_ <= Rational(1)) {
    throw std::invalid_argument("PackedRepetitionTracker: beta must exceed 1");
  }
  if (min_period_ == 0) {
    throw std::invalid_argument("PackedRepetitionTracker: minimal period must be positive");
  }
}

// Smallest run r of matches with (r + p) / p > beta.
std::size_t PackedRepetitionTracker::threshold(std::size_t period) const {
  const auto excess = static_cast<unsigned __int128>(beta_.num() - beta_.den()) * period;
  return static_cast<std::size_t>(excess / static_cast<unsigned __int128>(beta_.den())) + 1;
}

std::uint64_t PackedRepetitionTracker::bits(std::size_t start, std::size_t length) const {
  const std::size_t lo = start / 64;
  const std::size_t shift = start % 64;
  std::uint64_t v = words_[lo] >> shift;
  if (shift != 0 && lo + 1 < words_.size()) {
    v |= words_[lo + 1] << (64 - shift);
  }
  return length == 64 ? v : v & ((std::uint64_t{1} << length) - 1);
}

namespace {

// True if x has `run` consecutive one bits.
bool has_ones_run(std::uint64_t x, std::size_t run) {
  std::size_t have = 1;
  while (x != 0 && have < run) {
    const std::size_t step = std::min(have, run - have);
    x &= x >> step;
    have += step;
  }
  return x != 0;
}

}  // namespace

bool PackedRepetitionTracker::push(std::string_view block) {
  const std::size_t start = size_;
  const std::size_t end = start + block.size();
  words_.resize(end / 64 + 2, 0);
  for (std::size_t i = 0; i < block.size(); ++i) {
    const char c = block[i];
    if (c != '0' && c != '1') {
      throw std::invalid_argument("PackedRepetitionTracker: binary text expected");
    }
    const std::size_t pos = start + i;
    const std::uint64_t bit = std::uint64_t{1} << (pos % 64);
    if (c == '1') {
      words_[pos / 64] |= bit;
    } else {
      words_[pos / 64] &= ~bit;
    }
  }
  size_ = end;
  if (runs_.size() < end) {
    runs_.resize(end, 0);
  }

  bool ok = true;
  for (std::size_t p = min_period_; p < end; ++p) {
    const std::size_t need = threshold(p);
    std::size_t run = p < start ? runs_[p] : 0;
    for (std::size_t i0 = start; i0 < end; i0 += 64) {
      const std::size_t len = std::min<std::size_t>(64, end - i0);
      const std::uint64_t valid = len == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << len) - 1;
      std::uint64_t mismatch;
      if (i0 + len <= p) {
        mismatch = valid;
      } else if (i0 < p) {
        const std::size_t skip = p - i0;
        mismatch = ((bits(i0, len) ^ (bits(0, len - skip) << skip)) | ((std::uint64_t{1} << skip) - 1)) & valid;
      } else {
        mismatch = (bits(i0, len) ^ bits(i0 - p, len)) & valid;
      }
      if (mismatch == 0) {
        run += len;
        continue;
      }
      const auto lead = static_cast<std::size_t>(__builtin_ctzll(mismatch));
      run += lead;
      const bool run_in_block = lead > 0 || i0 > start;
      if ((run_in_block && run >= need) || (need < 64 && has_ones_run(~mismatch & valid, need))) {
        ok = false;
      }
      run = len - 1 - static_cast<std::size_t>(63 - __builtin_clzll(mismatch));
    }
    if (run >= need) {
      ok = false;
    }
    runs_[p] = static_cast<std::uint32_t>(run);
  }
  return ok;
}

void PackedRepetitionTracker::checkpoint() {
  saved_.emplace_back(size_, std::vector<std::uint32_t>(runs_.begin(), runs_.begin() +
                                                              static_cast<std::ptrdiff_t>(size_)));
}

void PackedRepetitionTracker::rollback() {
  auto& [len, runs] = saved_.back();
  size_ = len;
  std::copy(runs.begin(), runs.end(), runs_.begin());
  saved_.pop_back();
}

namespace {

void extend_free(Word& current, RepetitionTracker& tracker, std::size_t max_length, Alphabet alphabet,
                 const std::function<void(const Word&)>& visit) {
  visit(current);
  if (current.size() == max_length) {
    return;
  }
  for (int s = 0; s < alphabet.size(); ++s) {
    tracker.checkpoint();
    if (tracker.push(static_cast<char>('0' + s))) {
      current.push_back(static_cast<Symbol>(s));
      extend_free(current, tracker, max_length, alphabet, visit);
      current.pop_back();
    }
    tracker.rollback();
  }
}

}  // namespace

void for_each_free(Alphabet alphabet, const Rational& beta, std::size_t max_length,
                   const std::function<void(const Word&)>& visit, std::optional<Symbol> first) {
  RepetitionTracker tracker(beta, 1);
  Word current("", alphabet);
  if (!first) {
    extend_free(current, tracker, max_length, alphabet, visit);
    return;
  }
  if (max_length == 0 || !alphabet.contains(*first)) {
    return;
  }
  tracker.push(static_cast<char>('0' + *first));
  current.push_back(*first);
  extend_free(current, tracker, max_length, alphabet, visit);
}

WordSet enumerate_free(Alphabet alphabet, const Rational& beta, std::size_t length) {
  WordSet out;
  for_each_free(alphabet, beta, length, [&](const Word& w) {
    if (w.size() == length) {
      out.insert(w);
    }
  });
  return out;
}

WordSet enumerate_avoiding(const WordSet& forbidden, std::size_t cap) {
  if (forbidden.empty()) {
    throw std::invalid_argument("enumerate_avoiding: forbidden set is empty");
  }
  std::size_t longest = 0;
  for (const auto& f : forbidden) {
    longest = std::max(longest, f.size());
  }
  if (cap < longest) {
    throw std::invalid_argument("enumerate_avoiding: cap below the longest forbidden word");
  }
  // A word is kept iff it has no forbidden suffix and its prefix was kept.
  auto avoids_at_end = [&](const std::string& w) {
    for (const auto& f : forbidden) {
      if (f.size() <= w.size() && w.compare(w.size() - f.size(), f.size(), f.str()) == 0) {
        return false;
      }
    }
    return true;
  };
  WordSet out;
  std::deque<std::string> frontier;
  if (avoids_at_end("")) {
    frontier.emplace_back();
  }
  while (!frontier.empty()) {
    std::string w = std::move(frontier.front());
    frontier.pop_front();
    if (w.size() >= cap) {
      throw NotFiniteError("enumerate_avoiding: '" + w + "' of length " + std::to_string(cap) +
                           " avoids every forbidden factor; the avoiding set is not finite within the cap");
    }
    for (char c : {'0', '1'}) {
      std::string next = w + c;
      if (avoids_at_end(next)) {
        frontier.push_back(std::move(next));
      }
    }
    out.emplace(w);
  }
  return out;
}

}  // namespace imaged
