#include "imaged/word.hpp"

#include <algorithm>
#include <array>
#include <ostream>
#include <stdexcept>

namespace imaged {

Alphabet::Alphabet(int size) : size_(size) {
  if (size < 1 || size > 3) {
    throw std::invalid_argument("alphabet size must be 1, 2 or 3, got " + std::to_string(size));
  }
}

Word::Word(std::string_view digits, Alphabet alphabet) : digits_(digits), alphabet_(alphabet) {
  for (char c : digits_) {
    if (c < '0' || c - '0' >= alphabet.size()) {
      throw std::invalid_argument("symbol '" + std::string(1, c) + "' outside alphabet of size " +
                                  std::to_string(alphabet.size()));
    }
  }
}

Word Word::from_symbols(const std::vector<Symbol>& symbols, Alphabet alphabet) {
  Word w;
  w.alphabet_ = alphabet;
  w.digits_.reserve(symbols.size());
  for (Symbol s : symbols) {
    w.push_back(s);
  }
  return w;
}

Word Word::substr(std::size_t pos, std::size_t len) const {
  Word w;
  w.alphabet_ = alphabet_;
  w.digits_ = digits_.substr(pos, len);
  return w;
}

std::size_t Word::count(Symbol s) const {
  return static_cast<std::size_t>(std::count(digits_.begin(), digits_.end(), static_cast<char>('0' + s)));
}

int Word::letters_used() const {
  std::array<bool, 3> seen{};
  for (char c : digits_) {
    seen[static_cast<std::size_t>(c - '0')] = true;
  }
  return static_cast<int>(std::count(seen.begin(), seen.end(), true));
}

void Word::push_back(Symbol s) {
  if (!alphabet_.contains(s)) {
    throw std::invalid_argument("symbol " + std::to_string(s) + " outside alphabet");
  }
  digits_.push_back(static_cast<char>('0' + s));
}

Word operator+(const Word& a, const Word& b) {
  Word w;
  w.alphabet_ = a.alphabet_.size() >= b.alphabet_.size() ? a.alphabet_ : b.alphabet_;
  w.digits_ = a.digits_ + b.digits_;
  return w;
}

WordSet binary_words(std::initializer_list<std::string_view> digits) {
  WordSet out;
  for (auto d : digits) {
    out.emplace(d);
  }
  return out;
}

Word complement(const Word& w) {
  if (w.alphabet().size() != 2) {
    throw std::invalid_argument("complement requires a binary word");
  }
  std::string out(w.str());
  for (char& c : out) {
    c = c == '0' ? '1' : '0';
  }
  return Word(out);
}

WordSet factor_set(const Word& w, std::size_t length) {
  WordSet out;
  if (length > w.size()) {
    return out;
  }
  for (std::size_t i = 0; i + length <= w.size(); ++i) {
    out.insert(w.substr(i, length));
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
  return os << (w.empty() ? std::string_view("ε") : w.view());
}

}  // namespace imaged
