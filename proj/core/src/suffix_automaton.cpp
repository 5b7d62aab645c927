#include "imaged/suffix_automaton.hpp"

#include <stdexcept>

namespace imaged {

SuffixAutomaton::SuffixAutomaton() { states_.emplace_back(); }

void SuffixAutomaton::reserve(std::size_t text_length) { states_.reserve(2 * text_length + 1); }

void SuffixAutomaton::extend(char c) {
  if (c != '#' && (c < '0' || c > '2')) {
    throw std::invalid_argument("suffix automaton: unsupported symbol");
  }
  const std::size_t x = code(c);
  const auto cur = static_cast<State>(states_.size());
  {
    Node node;
    node.length = states_[static_cast<std::size_t>(last_)].length + 1;
    node.first_end = node.length;
    states_.push_back(node);
  }
  State p = last_;
  while (p != kNone && states_[static_cast<std::size_t>(p)].next[x] == kNone) {
    states_[static_cast<std::size_t>(p)].next[x] = cur;
    p = states_[static_cast<std::size_t>(p)].link;
  }
  if (p == kNone) {
    states_[static_cast<std::size_t>(cur)].link = kRoot;
  } else {
    const State q = states_[static_cast<std::size_t>(p)].next[x];
    if (states_[static_cast<std::size_t>(p)].length + 1 == states_[static_cast<std::size_t>(q)].length) {
      states_[static_cast<std::size_t>(cur)].link = q;
    } else {
      const auto clone = static_cast<State>(states_.size());
      Node copy = states_[static_cast<std::size_t>(q)];
      copy.length = states_[static_cast<std::size_t>(p)].length + 1;
      states_.push_back(copy);
      while (p != kNone && states_[static_cast<std::size_t>(p)].next[x] == q) {
        states_[static_cast<std::size_t>(p)].next[x] = clone;
        p = states_[static_cast<std::size_t>(p)].link;
      }
      states_[static_cast<std::size_t>(q)].link = clone;
      states_[static_cast<std::size_t>(cur)].link = clone;
    }
  }
  last_ = cur;
}

SuffixAutomaton::State SuffixAutomaton::walk(State s, std::string_view text) const {
  for (char c : text) {
    if (s == kNone) {
      return kNone;
    }
    s = step(s, c);
  }
  return s;
}

}  // namespace imaged
