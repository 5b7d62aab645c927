#include "imaged/morphism.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace imaged {

namespace {

Alphabet smallest_target(const std::vector<Word>& images) {
  int largest = 1;
  for (const auto& w : images) {
    for (char c : w.str()) {
      largest = std::max(largest, c - '0');
    }
  }
  return Alphabet(largest + 1);
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

Word parse_image(std::string_view text) {
  for (char c : text) {
    if (c < '0' || c > '2') {
      throw std::invalid_argument("morphism: bad image symbol '" + std::string(1, c) + "'");
    }
  }
  return Word(text, Alphabet::ternary());
}

}  // namespace

Morphism::Morphism(std::vector<Word> images) : Morphism(images, smallest_target(images)) {}

Morphism::Morphism(std::vector<Word> images, Alphabet target)
    : source_(static_cast<int>(images.size())), target_(target), images_(std::move(images)) {
  for (auto& w : images_) {
    for (char c : w.str()) {
      if (!target_.contains(static_cast<Symbol>(c - '0'))) {
        throw std::invalid_argument("morphism: image '" + w.str() + "' outside the target alphabet");
      }
    }
    w = Word(w.view(), target_);
  }
}

Morphism Morphism::parse_compact(std::string_view text) {
  std::vector<Word> images;
  text = trim(text);
  std::size_t pos = 0;
  while (true) {
    const auto slash = text.find('/', pos);
    images.push_back(parse_image(trim(text.substr(pos, slash == std::string_view::npos ? slash : slash - pos))));
    if (slash == std::string_view::npos) {
      break;
    }
    pos = slash + 1;
  }
  if (images.size() < 2) {
    throw std::invalid_argument("morphism: compact form needs at least two images separated by '/'");
  }
  return Morphism(std::move(images));
}

Morphism Morphism::parse_lines(std::string_view text) {
  std::vector<Word> images;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    const auto arrow = line.find("->");
    if (arrow == std::string_view::npos) {
      throw std::invalid_argument("morphism line " + std::to_string(line_no) + ": expected 'SYMBOL -> IMAGE'");
    }
    const auto symbol = trim(line.substr(0, arrow));
    if (symbol.size() != 1 || symbol[0] != static_cast<char>('0' + images.size())) {
      throw std::invalid_argument("morphism line " + std::to_string(line_no) + ": expected symbol " +
                                  std::to_string(images.size()));
    }
    images.push_back(parse_image(trim(line.substr(arrow + 2))));
  }
  if (images.empty() || images.size() > 3) {
    throw std::invalid_argument("morphism: expected 1 to 3 image lines");
  }
  return Morphism(std::move(images));
}

Morphism Morphism::parse(std::string_view text) {
  return text.find("->") != std::string_view::npos ? parse_lines(text) : parse_compact(text);
}

std::string Morphism::to_text() const {
  std::string out;
  for (std::size_t s = 0; s < images_.size(); ++s) {
    out += std::to_string(s) + " -> " + images_[s].str() + "\n";
  }
  return out;
}

std::string Morphism::compact() const {
  std::string out;
  for (std::size_t s = 0; s < images_.size(); ++s) {
    if (s > 0) {
      out += '/';
    }
    out += images_[s].str();
  }
  return out;
}

std::string Morphism::digest() const { return fnv1a_hex(to_text()); }

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Word apply(const Morphism& m, const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Symbol s = w[i];
    if (!m.source().contains(s)) {
      throw std::invalid_argument("apply: symbol " + std::to_string(s) + " outside the source alphabet");
    }
    out += m.image(s).str();
  }
  return Word(out, m.target());
}

MorphismFlags classify(const Morphism& m) {
  MorphismFlags f;
  const auto& images = m.images();
  f.erasing = std::any_of(images.begin(), images.end(), [](const Word& w) { return w.empty(); });
  f.identity = true;
  for (std::size_t s = 0; s < images.size() && f.identity; ++s) {
    f.identity = images[s].size() == 1 && images[s][0] == s;
  }
  f.complementary = m.source().size() == 2 && m.target().size() == 2 && images[0].str() == "1" &&
                    images[1].str() == "0";
  f.admissible = !f.erasing && !f.identity;
  f.neat = f.admissible && !f.complementary;
  return f;
}

std::optional<std::size_t> uniform_width(const Morphism& m) {
  const auto& images = m.images();
  if (images.empty()) {
    return std::nullopt;
  }
  const std::size_t q = images.front().size();
  for (const auto& w : images) {
    if (w.size() != q) {
      return std::nullopt;
    }
  }
  return q;
}

std::optional<SyncViolation> find_sync_violation(const Morphism& m) {
  if (classify(m).erasing) {
    throw std::invalid_argument("is_synchronizing: erasing morphism");
  }
  const int k = m.source().size();
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      const std::string block = m.image(static_cast<Symbol>(a)).str() + m.image(static_cast<Symbol>(b)).str();
      for (int c = 0; c < k; ++c) {
        const std::string& needle = m.image(static_cast<Symbol>(c)).str();
        for (auto pos = block.find(needle); pos != std::string::npos; pos = block.find(needle, pos + 1)) {
          const bool flush_left = pos == 0 && a == c;
          const bool flush_right = pos + needle.size() == block.size() && b == c;
          if (!flush_left && !flush_right) {
            return SyncViolation{static_cast<Symbol>(a), static_cast<Symbol>(b), static_cast<Symbol>(c), pos};
          }
        }
      }
    }
  }
  return std::nullopt;
}

bool is_synchronizing(const Morphism& m) { return !find_sync_violation(m).has_value(); }

}  // namespace imaged
