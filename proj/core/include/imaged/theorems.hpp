#pragma once

#include <cstddef>
#include <vector>

#include "imaged/factor_oracle.hpp"
#include "imaged/morphism.hpp"
#include "imaged/report.hpp"
#include "imaged/search.hpp"

namespace imaged {

/// Length-7 factors of the language containing 00 and 11 but neither 0101
/// nor 1010.
WordSet derive_Sf(const FactorOracle& o);

/// Binary morphisms with both images among the given square roots, other
/// than the identity, the complementary morphism and constant morphisms.
std::vector<Morphism> derive_short_morphisms(const WordSet& roots);

struct Thm2Options {
  unsigned threads = 1;
  std::size_t oracle_cap = 300;
  /// Run the remaining stages after a failure (the report still fails).
  bool keep_going = false;
};

/// Pipeline for the length-7 construction: forbidden factors, repetition
/// freeness with the square whitelist, complement pairs, the length-7
/// cover, the derived square-bearing factor set and candidate morphisms,
/// and the final image checks. Stops at the first failing stage.
Report verify_thm2(const Morphism& m37, const Thm2Options& opts = {});

struct Thm4Options {
  unsigned threads = 1;
  std::size_t oracle_cap = 1952;
  std::size_t image_bound = 244;
  /// Also search a witness in the language for each of the 36 words.
  bool witnesses = true;
  /// Longest image tried for a letter x when xx is not a factor of the word.
  std::size_t witness_image_cap = 24;
  /// Run the remaining stages after a failure (the report still fails).
  bool keep_going = false;
};

/// Pipeline for the 36-factor construction: forbidden factors, repetition
/// freeness, square inventory, the non-imaged words, and the finite set of
/// words avoiding them.
Report verify_thm4(const Morphism& m342, const Thm4Options& opts = {});

/// The length-6 search as a report (stage "backtrack").
Report verify_thm3(const std::vector<Word>& patterns, const SearchConfig& cfg = {});

/// The lower-bound search as a report (stage "exhaustive-search").
Report verify_thm5(std::size_t target, const SearchConfig& cfg = {});

}  // namespace imaged
