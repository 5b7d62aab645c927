#pragma once

#include <string>
#include <vector>

#include "imaged/factor_oracle.hpp"
#include "imaged/morphism.hpp"
#include "imaged/rational.hpp"
#include "imaged/word.hpp"

/// Published constants for the two constructions and the two searches.
namespace imaged::data {

/// 37-uniform morphism from ternary 7/4+-free words (length-7 construction).
Morphism morphism37();
/// 342-uniform morphism from ternary 7/4+-free words (36-factor construction).
Morphism morphism342();
/// Common prefix of the three 342-symbol images.
Word prefix342();

// Length-7 construction.
WordSet forbidden37();  // {0000, 1111, 0010, 1011, 010101}
CoverRequirement cover37();  // 0101, or 1010, or both 00 and 11
std::vector<Morphism> short_morphisms();  // the ten candidate morphisms m(0)/m(1)
WordSet square_factors37();  // the length-7 factors with 00 and 11 but no 0101/1010
WordSet allowed_square_roots37();  // {0, 1, 01, 10}
inline const Rational kAlpha{7, 4};
inline const Rational kBeta37{289, 148};
inline constexpr std::size_t kMinPeriod37 = 3;

// Length-6 backtracking.
std::vector<Word> backtrack_patterns();  // the 16 words of the third backtrack rule

// 36-factor construction.
WordSet forbidden342();  // {010, 101, 111, 1001, 00000}
std::vector<Word> non_imaged342();  // the 7 words T
WordSet forbidden_or_non_imaged342();  // F ∪ T, 12 words
WordSet imaged_candidates342();  // the 36 words avoiding F ∪ T
inline const Rational kBeta342{1321, 684};
inline constexpr std::size_t kMinPeriod342 = 245;
inline constexpr std::size_t kImageBound342 = 244;
inline constexpr std::size_t kOracleCap342 = 8 * kImageBound342;

/// Every bundled constant as "name: value" lines, for diffing by hand.
std::string dump();

}  // namespace imaged::data
