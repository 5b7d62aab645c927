#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>

#include "imaged/morphism.hpp"
#include "imaged/rational.hpp"
#include "imaged/repetition.hpp"

namespace imaged {

/// A morphism fails a hypothesis of the freeness transfer (uniformity or
/// synchronization).
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// max(2β/(β−α), 2(q−1)(2β−1)/(q(β−1))), exactly.
/// Requires 1 < alpha < beta < 2 and q >= 1 (std::invalid_argument otherwise).
Rational sync_bound(const Rational& alpha, const Rational& beta, std::size_t q);

/// Largest integer strictly below `bound` (0 if there is none).
std::size_t longest_length_below(const Rational& bound);

struct TransferCounterexample {
  Word preimage;
  RepetitionWitness witness;  // located in apply(m, preimage)
};

struct TransferReport {
  bool pass = false;
  Rational bound;
  std::size_t max_length = 0;     // longest pre-image length examined (< bound)
  std::size_t words_checked = 0;  // alpha+-free pre-images of length < bound, ε included
  std::optional<TransferCounterexample> counterexample;
};

/// The premise alone: images of every alpha+-free pre-image of length <=
/// max_length are (beta+, n)-free. Requires only a non-erasing morphism.
/// `bound` in the report is left at max_length + 1.
TransferReport check_images_free(const Morphism& m, const Rational& alpha, const Rational& beta, std::size_t n,
                                 std::size_t max_length, unsigned threads = 1);

/// Checks that the image of every alpha+-free word shorter than
/// sync_bound(alpha, beta, q) is (beta+, n)-free. A pass certifies the same
/// for all alpha+-free pre-images, finite or infinite.
///
/// The morphism must be uniform and synchronizing; violations raise
/// HypothesisError before any enumeration. Work is split by the first
/// pre-image symbol over `threads` workers; the report does not depend on it.
TransferReport verify_transfer(const Morphism& m, const Rational& alpha, const Rational& beta, std::size_t n,
                               unsigned threads = 1);

}  // namespace imaged
