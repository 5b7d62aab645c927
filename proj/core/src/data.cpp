#include "imaged/data.hpp"

namespace imaged::data {

namespace {

const char* const kPrefix342 =
    "000110000110001100011000011000110001100001100001100011000"
    "110000110001100011000011000";

std::string join(const WordSet& words) {
  std::string out;
  for (const auto& w : words) {
    out += (out.empty() ? "" : ",") + (w.empty() ? std::string("ε") : w.str());
  }
  return out;
}

}  // namespace

Morphism morphism37() {
  return Morphism::parse_lines(
      "0 -> 0001110101001100011101000110101001101\n"
      "1 -> 0001110101000110100110001110100110101\n"
      "2 -> 0001110100110001110101000110101001101\n");
}

Word prefix342() { return Word(kPrefix342); }

Morphism morphism342() {
  const std::string p = kPrefix342;
  const std::string i0 = p +
                         "1100011000011000011000110001100001100011000110000110000110001"
                         "100011000011000110001100001100011000110000110000110001100011000011"
                         "000110001100001100001100011000110000110001100011000011000011000110"
                         "00110000110000110001100011000011000110001100001100001100011000110";
  const std::string i1 = p +
                         "0110001100011000011000011000110001100001100011000110000110000"
                         "110001100011000011000110001100001100011000110000110000110001100011"
                         "000011000110001100001100001100011000110000110001100011000011000110"
                         "00110000110000110001100011000011000110001100001100001100011000110";
  const std::string i2 = p +
                         "0110001100011000011000011000110001100001100011000110000110000"
                         "110001100011000011000011000110001100001100011000110000110000110001"
                         "100011000011000110001100001100001100011000110000110001100011000011"
                         "00011000110000110000110001100011000011000110001100001100001100011";
  return Morphism({Word(i0), Word(i1), Word(i2)}, Alphabet::binary());
}

WordSet forbidden37() { return binary_words({"0000", "1111", "0010", "1011", "010101"}); }

CoverRequirement cover37() { return {{Word("0101")}, {Word("1010")}, {Word("00"), Word("11")}}; }

std::vector<Morphism> short_morphisms() {
  std::vector<Morphism> out;
  for (const char* m : {"0/01", "0/10", "1/01", "1/10", "01/0", "01/1", "10/0", "10/1", "01/10", "10/01"}) {
    out.push_back(Morphism::parse_compact(m));
  }
  return out;
}

WordSet square_factors37() {
  return binary_words({"0001101", "0001110", "0011000", "0011101", "0100011", "0100110", "0110001", "1000110",
                       "1000111", "1001100", "1001101", "1100011"});
}

WordSet allowed_square_roots37() { return binary_words({"0", "1", "01", "10"}); }

std::vector<Word> backtrack_patterns() {
  std::vector<Word> out;
  for (const char* f : {"010101", "001100", "001001", "011011", "001010", "010100", "011101", "010001", "011100",
                        "001110", "011000", "000110", "010111", "000101", "010110", "011010"}) {
    out.emplace_back(f);
  }
  return out;
}

WordSet forbidden342() { return binary_words({"010", "101", "111", "1001", "00000"}); }

std::vector<Word> non_imaged342() {
  std::vector<Word> out;
  for (const char* t : {"00011000", "0110001", "1000110", "1000011", "1100001", "0000110", "0110000"}) {
    out.emplace_back(t);
  }
  return out;
}

WordSet forbidden_or_non_imaged342() {
  WordSet out = forbidden342();
  for (auto& t : non_imaged342()) {
    out.insert(t);
  }
  return out;
}

WordSet imaged_candidates342() {
  return binary_words({"",       "0",     "00",     "000",     "0000",   "00001",  "000011", "0001",  "00011",
                       "000110", "0001100", "001",  "0011",    "00110",  "001100", "0011000", "01",    "011",
                       "0110",   "01100", "011000", "1",       "10",     "100",    "1000",   "10000", "100001",
                       "10001",  "100011", "11",    "110",     "1100",   "11000",  "110000", "110001", "1100011"});
}

std::string dump() {
  std::string out;
  const auto m37 = morphism37();
  const auto m342 = morphism342();
  out += "morphism37 digest " + m37.digest() + "\n" + m37.to_text();
  out += "morphism342 digest " + m342.digest() + "\n" + m342.to_text();
  out += "prefix342: " + prefix342().str() + "\n";
  out += "forbidden37: " + join(forbidden37()) + "\n";
  out += "short_morphisms:";
  for (const auto& m : short_morphisms()) {
    out += " " + m.compact();
  }
  out += "\n";
  out += "square_factors37: " + join(square_factors37()) + "\n";
  out += "backtrack_patterns:";
  for (const auto& f : backtrack_patterns()) {
    out += " " + f.str();
  }
  out += "\n";
  out += "forbidden342: " + join(forbidden342()) + "\n";
  out += "non_imaged342:";
  for (const auto& t : non_imaged342()) {
    out += " " + t.str();
  }
  out += "\n";
  out += "imaged_candidates342: " + join(imaged_candidates342()) + "\n";
  return out;
}

}  // namespace imaged::data
