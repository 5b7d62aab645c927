#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace imaged {

/// Suffix automaton over the byte alphabet {'0', '1', '2', '#'}.
///
/// Accepts exactly the factors of the text it was built from. '#' is meant
/// as a separator between independent strings; queries never contain it.
class SuffixAutomaton {
 public:
  using State = std::int32_t;
  static constexpr State kNone = -1;
  static constexpr State kRoot = 0;

  SuffixAutomaton();

  void reserve(std::size_t text_length);
  void extend(char c);

  /// Transition, or kNone.
  [[nodiscard]] State step(State s, char c) const {
    return states_[static_cast<std::size_t>(s)].next[code(c)];
  }
  [[nodiscard]] State walk(State s, std::string_view text) const;
  [[nodiscard]] bool contains(std::string_view text) const { return walk(kRoot, text) != kNone; }

  /// End position (exclusive) of the first occurrence of a string that
  /// leads to state s, in the text as built.
  [[nodiscard]] std::size_t first_end(State s) const {
    return static_cast<std::size_t>(states_[static_cast<std::size_t>(s)].first_end);
  }

  [[nodiscard]] std::size_t state_count() const { return states_.size(); }

 private:
  static std::size_t code(char c) { return c == '#' ? 3 : static_cast<std::size_t>(c - '0'); }

  struct Node {
    std::int32_t length = 0;
    State link = kNone;
    std::int32_t first_end = 0;
    std::array<State, 4> next{kNone, kNone, kNone, kNone};
  };

  std::vector<Node> states_;
  State last_ = kRoot;
};

}  // namespace imaged
