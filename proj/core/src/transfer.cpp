#include "imaged/transfer.hpp"

#include <functional>

#include "imaged/parallel.hpp"

namespace imaged {

Rational sync_bound(const Rational& alpha, const Rational& beta, std::size_t q) {
  const Rational one(1);
  const Rational two(2);
  if (!(one < alpha && alpha < beta && beta < two)) {
    throw std::invalid_argument("bad exponent domain: need 1 < alpha < beta < 2, got alpha=" + alpha.str() +
                                " beta=" + beta.str());
  }
  if (q == 0) {
    throw std::invalid_argument("bad exponent domain: uniform width must be at least 1");
  }
  const Rational width(static_cast<std::int64_t>(q));
  const Rational first = two * beta / (beta - alpha);
  const Rational second = two * (width - one) * (two * beta - one) / (width * (beta - one));
  return std::max(first, second);
}

std::size_t longest_length_below(const Rational& bound) {
  if (bound <= Rational(0)) {
    return 0;
  }
  const auto c = static_cast<std::size_t>(bound.ceil());
  return c - 1;  // ceil(b) - 1 < b <= ceil(b)
}

namespace {

struct Partial {
  std::size_t words = 0;
  std::optional<Word> failing;
};

// Depth-first over alpha+-free pre-images; the image is grown block by
// block in a second tracker.
template <class ImageTracker>
class TransferWalker {
 public:
  TransferWalker(const Morphism& m, const Rational& alpha, const Rational& beta, std::size_t n,
                 std::size_t max_length)
      : m_(m), source_(alpha, 1), image_(beta, n), max_length_(max_length), current_("", m.source()) {}

  void run_from(Symbol first, Partial& out) {
    source_.push(static_cast<char>('0' + first));
    current_.push_back(first);
    const bool image_ok = image_.push(m_.image(first).view());
    walk(image_ok, out);
  }

 private:
  void walk(bool image_ok, Partial& out) {
    ++out.words;
    if (!image_ok && !out.failing) {
      out.failing = current_;
    }
    if (current_.size() == max_length_) {
      return;
    }
    for (int s = 0; s < m_.source().size(); ++s) {
      source_.checkpoint();
      if (source_.push(static_cast<char>('0' + s))) {
        current_.push_back(static_cast<Symbol>(s));
        if (out.failing) {
          walk(true, out);
        } else {
          image_.checkpoint();
          const bool ok = image_.push(m_.image(static_cast<Symbol>(s)).view());
          walk(ok, out);
          image_.rollback();
        }
        current_.pop_back();
      }
      source_.rollback();
    }
  }

  const Morphism& m_;
  RepetitionTracker source_;
  ImageTracker image_;
  std::size_t max_length_;
  Word current_;
};

}  // namespace

TransferReport check_images_free(const Morphism& m, const Rational& alpha, const Rational& beta, std::size_t n,
                                 std::size_t max_length, unsigned threads) {
  if (!(Rational(1) < alpha && alpha < beta)) {
    throw std::invalid_argument("bad exponent domain: need 1 < alpha < beta");
  }
  if (n == 0) {
    throw std::invalid_argument("minimal period must be positive");
  }
  if (classify(m).erasing) {
    throw HypothesisError("erasing morphism");
  }
  TransferReport report;
  report.bound = Rational(static_cast<std::int64_t>(max_length + 1));
  report.max_length = max_length;

  const auto k = static_cast<std::size_t>(m.source().size());
  std::vector<Partial> parts(k);
  if (max_length > 0) {
    const bool packed = m.target().size() == 2;
    parallel_for(k, threads, [&](std::size_t s) {
      if (packed) {
        TransferWalker<PackedRepetitionTracker> walker(m, alpha, beta, n, max_length);
        walker.run_from(static_cast<Symbol>(s), parts[s]);
      } else {
        TransferWalker<RepetitionTracker> walker(m, alpha, beta, n, max_length);
        walker.run_from(static_cast<Symbol>(s), parts[s]);
      }
    });
  }
  report.words_checked = 1;  // ε, whose image is trivially free
  for (const auto& part : parts) {
    report.words_checked += part.words;
    if (part.failing && !report.counterexample) {
      const Word image = apply(m, *part.failing);
      const auto witness = find_repetition(image, beta, n);
      report.counterexample = TransferCounterexample{*part.failing, witness.value()};
    }
  }
  report.pass = !report.counterexample;
  return report;
}

TransferReport verify_transfer(const Morphism& m, const Rational& alpha, const Rational& beta, std::size_t n,
                               unsigned threads) {
  sync_bound(alpha, beta, 1);  // validates the exponent domain
  const auto q = uniform_width(m);
  if (!q || *q == 0) {
    throw HypothesisError("not uniform: images have different lengths or are empty");
  }
  if (const auto v = find_sync_violation(m)) {
    throw HypothesisError("not synchronizing: image of " + std::to_string(v->c) + " occurs at offset " +
                          std::to_string(v->offset) + " of the image of " + std::to_string(v->a) +
                          std::to_string(v->b));
  }
  const Rational bound = sync_bound(alpha, beta, *q);
  TransferReport report = check_images_free(m, alpha, beta, n, longest_length_below(bound), threads);
  report.bound = bound;
  return report;
}

}  // namespace imaged
