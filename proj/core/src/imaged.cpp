#include "imaged/imaged.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace imaged {

const char* to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::EmptyWord:
      return "empty-word-rule";
    case WitnessKind::Unary:
      return "unary-rule";
    case WitnessKind::Morphic:
      return "morphic";
  }
  return "?";
}

namespace {

bool is_identity_images(std::string_view m0, std::string_view m1) { return m0 == "0" && m1 == "1"; }

Morphism make_binary(std::string_view m0, std::string_view m1) {
  return Morphism({Word(m0), Word(m1)}, Alphabet::binary());
}

}  // namespace

ImagePattern::ImagePattern(const Word& f) : f_(f) {
  for (char c : f.str()) {
    if (c == '0') {
      ++zeros_;
    } else if (c == '1') {
      ++ones_;
    } else {
      throw std::invalid_argument("image pattern must be binary");
    }
  }
  if (zeros_ == 0 || ones_ == 0) {
    throw std::invalid_argument("image pattern '" + f.str() + "' must contain both letters");
  }
}

bool ImagePattern::parse(std::string_view g, std::size_t a, std::size_t b, std::string_view& m0,
                         std::string_view& m1) const {
  if (zeros_ * a + ones_ * b != g.size()) {
    return false;
  }
  bool have0 = false;
  bool have1 = false;
  std::size_t pos = 0;
  for (char c : f_.str()) {
    if (c == '0') {
      const auto slice = g.substr(pos, a);
      if (!have0) {
        m0 = slice;
        have0 = true;
      } else if (slice != m0) {
        return false;
      }
      pos += a;
    } else {
      const auto slice = g.substr(pos, b);
      if (!have1) {
        m1 = slice;
        have1 = true;
      } else if (slice != m1) {
        return false;
      }
      pos += b;
    }
  }
  return true;
}

std::optional<Morphism> ImagePattern::suffix_image(std::string_view text, std::size_t min_sum) const {
  const std::size_t n = text.size();
  const std::string& f = f_.str();
  const char last = f.back();
  std::size_t run = 0;
  while (run < f.size() && f[f.size() - 1 - run] == last) {
    ++run;
  }
  const std::size_t n_last = last == '0' ? zeros_ : ones_;
  const std::size_t n_other = last == '0' ? ones_ : zeros_;
  std::string_view m0;
  std::string_view m1;
  for (std::size_t lx = 1; n_last * lx + n_other <= n; ++lx) {
    // The suffix has to end with m(last)^run.
    const auto tail = text.substr(n - lx);
    bool ok = true;
    for (std::size_t k = 1; k < run && ok; ++k) {
      ok = text.substr(n - (k + 1) * lx, lx) == tail;
    }
    if (!ok) {
      continue;
    }
    for (std::size_t ly = 1; n_last * lx + n_other * ly <= n; ++ly) {
      if (lx + ly < min_sum) {
        continue;
      }
      const std::size_t a = last == '0' ? lx : ly;
      const std::size_t b = last == '0' ? ly : lx;
      const std::size_t len = n_last * lx + n_other * ly;
      if (parse(text.substr(n - len), a, b, m0, m1) && !is_identity_images(m0, m1)) {
        return make_binary(m0, m1);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::pair<Morphism, std::size_t>> ImagePattern::find_image(std::string_view text) const {
  const std::size_t n = text.size();
  std::string_view m0;
  std::string_view m1;
  for (std::size_t start = 0; start < n; ++start) {
    const auto rest = text.substr(start);
    for (std::size_t a = 1; zeros_ * a + ones_ <= rest.size(); ++a) {
      for (std::size_t b = 1; zeros_ * a + ones_ * b <= rest.size(); ++b) {
        const std::size_t len = zeros_ * a + ones_ * b;
        if (parse(rest.substr(0, len), a, b, m0, m1) && !is_identity_images(m0, m1)) {
          return std::make_pair(make_binary(m0, m1), start);
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<Morphism> parse_as_image(const Word& g, const Word& f) {
  if (g.empty()) {
    throw std::invalid_argument("parse_as_image: empty target word");
  }
  const ImagePattern pattern(f);
  std::vector<Morphism> out;
  std::string_view m0;
  std::string_view m1;
  const std::size_t n = g.size();
  for (std::size_t a = 1; pattern.zeros() * a + pattern.ones() <= n; ++a) {
    const std::size_t rest = n - pattern.zeros() * a;
    if (rest % pattern.ones() != 0) {
      continue;
    }
    const std::size_t b = rest / pattern.ones();
    if (pattern.parse(g.view(), a, b, m0, m1) && !is_identity_images(m0, m1)) {
      out.push_back(make_binary(m0, m1));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<ImagedWitness> imaged_in_finite(const Word& f, const Word& w) {
  if (f.empty()) {
    return ImagedWitness{f, WitnessKind::EmptyWord, std::nullopt, std::nullopt, std::nullopt};
  }
  if (!w.contains(f)) {
    throw std::invalid_argument("imaged_in_finite: '" + f.str() + "' is not a factor of '" + w.str() + "'");
  }
  if (f.letters_used() == 1) {
    return ImagedWitness{f, WitnessKind::Unary, std::nullopt, std::nullopt, std::nullopt};
  }
  const ImagePattern pattern(f);
  if (auto found = pattern.find_image(w.view())) {
    return ImagedWitness{f, WitnessKind::Morphic, std::move(found->first), found->second, std::nullopt};
  }
  return std::nullopt;
}

namespace {

class OracleImageSearch {
 public:
  OracleImageSearch(const Word& f, const FactorOracle& o, const std::vector<Word>& c0, const std::vector<Word>& c1)
      : f_(f.str()), o_(o), candidates_{&c0, &c1} {}

  bool run() { return step(0, FactorOracle::Cursor{}); }

  const Word& image(int x) const { return images_[static_cast<std::size_t>(x)]; }
  FactorOracle::Cursor end() const { return end_; }

 private:
  bool step(std::size_t i, FactorOracle::Cursor cursor) {
    if (i == f_.size()) {
      if (images_[0].str() == "0" && images_[1].str() == "1") {
        return false;
      }
      end_ = cursor;
      return true;
    }
    const auto x = static_cast<std::size_t>(f_[i] - '0');
    if (assigned_[x]) {
      const auto next = o_.advance(cursor, images_[x].view());
      return next.alive() && step(i + 1, next);
    }
    assigned_[x] = true;
    for (const auto& candidate : *candidates_[x]) {
      if (candidate.empty() || cursor.length + candidate.size() > o_.max_len()) {
        continue;
      }
      images_[x] = candidate;
      const auto next = o_.advance(cursor, candidate.view());
      if (next.alive() && step(i + 1, next)) {
        return true;
      }
    }
    assigned_[x] = false;
    return false;
  }

  std::string f_;
  const FactorOracle& o_;
  std::array<const std::vector<Word>*, 2> candidates_;
  std::array<bool, 2> assigned_{};
  std::array<Word, 2> images_;
  FactorOracle::Cursor end_;
};

}  // namespace

std::optional<ImagedWitness> find_oracle_image(const Word& f, const FactorOracle& o,
                                               const std::vector<Word>& candidates0,
                                               const std::vector<Word>& candidates1) {
  const ImagePattern pattern(f);
  OracleImageSearch search(f, o, candidates0, candidates1);
  if (!search.run()) {
    return std::nullopt;
  }
  Morphism m({search.image(0), search.image(1)}, Alphabet::binary());
  const Word image = apply(m, f);
  auto located = o.witness(image);
  return ImagedWitness{f, WitnessKind::Morphic, std::move(m), located->offset, located->preimage};
}

std::optional<ImagedWitness> imaged_in_oracle(const Word& f, const FactorOracle& o, const SquareInventory& inv) {
  if (!f.contains(std::string_view("00")) || !f.contains(std::string_view("11"))) {
    throw std::invalid_argument("imaged_in_oracle: '" + f.str() + "' must contain both 00 and 11");
  }
  const ImagePattern pattern(f);
  const std::size_t longest = inv.by_length.empty() ? 0 : inv.by_length.rbegin()->first;
  if ((pattern.zeros() + pattern.ones()) * longest > o.max_len()) {
    throw std::out_of_range("imaged_in_oracle: oracle cap " + std::to_string(o.max_len()) +
                            " is below the longest candidate image " +
                            std::to_string((pattern.zeros() + pattern.ones()) * longest));
  }
  std::vector<Word> pool;
  for (const auto& [len, bucket] : inv.by_length) {
    pool.insert(pool.end(), bucket.begin(), bucket.end());
  }
  return find_oracle_image(f, o, pool, pool);
}

}  // namespace imaged
