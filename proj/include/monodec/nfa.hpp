#ifndef MONODEC_NFA_HPP_
#define MONODEC_NFA_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monodec/alphabet.hpp"
#include "monodec/regex.hpp"

namespace monodec {

// Nondeterministic finite automaton with epsilon transitions. Symbols are
// alphabet indices.
struct Nfa {
  Alphabet alphabet;
  uint32_t num_states = 0;
  // edges[q] = list of (symbol index, target)
  std::vector<std::vector<std::pair<uint32_t, uint32_t>>> edges;
  std::vector<std::vector<uint32_t>> eps;  // eps[q] = epsilon targets
  std::vector<uint32_t> initial;
  std::vector<bool> accepting;

  uint32_t add_state() {
    edges.emplace_back();
    eps.emplace_back();
    accepting.push_back(false);
    return num_states++;
  }

  void add_edge(uint32_t from, uint32_t sym, uint32_t to) {
    edges[from].emplace_back(sym, to);
  }
  void add_eps(uint32_t from, uint32_t to) { eps[from].push_back(to); }
};

namespace detail {

// Thompson construction fragment: one entry, one exit, exit not yet accepting.
struct NfaFragment {
  uint32_t entry;
  uint32_t exit;
};

inline NfaFragment build_thompson(Nfa& nfa, const RegexNode& node) {
  switch (node.kind) {
    case RegexNode::Kind::Empty: {
      uint32_t s = nfa.add_state();
      uint32_t t = nfa.add_state();
      return {s, t};  // no path from s to t
    }
    case RegexNode::Kind::Epsilon: {
      uint32_t s = nfa.add_state();
      uint32_t t = nfa.add_state();
      nfa.add_eps(s, t);
      return {s, t};
    }
    case RegexNode::Kind::Letter: {
      uint32_t s = nfa.add_state();
      uint32_t t = nfa.add_state();
      nfa.add_edge(s, static_cast<uint32_t>(nfa.alphabet.index_of(node.letter)),
                   t);
      return {s, t};
    }
    case RegexNode::Kind::Concat: {
      NfaFragment a = build_thompson(nfa, *node.left);
      NfaFragment b = build_thompson(nfa, *node.right);
      nfa.add_eps(a.exit, b.entry);
      return {a.entry, b.exit};
    }
    case RegexNode::Kind::Union: {
      NfaFragment a = build_thompson(nfa, *node.left);
      NfaFragment b = build_thompson(nfa, *node.right);
      uint32_t s = nfa.add_state();
      uint32_t t = nfa.add_state();
      nfa.add_eps(s, a.entry);
      nfa.add_eps(s, b.entry);
      nfa.add_eps(a.exit, t);
      nfa.add_eps(b.exit, t);
      return {s, t};
    }
    case RegexNode::Kind::Star: {
      NfaFragment a = build_thompson(nfa, *node.left);
      uint32_t s = nfa.add_state();
      uint32_t t = nfa.add_state();
      nfa.add_eps(s, a.entry);
      nfa.add_eps(s, t);
      nfa.add_eps(a.exit, a.entry);
      nfa.add_eps(a.exit, t);
      return {s, t};
    }
    case RegexNode::Kind::Plus: {
      NfaFragment a = build_thompson(nfa, *node.left);
      uint32_t s = nfa.add_state();
      uint32_t t = nfa.add_state();
      nfa.add_eps(s, a.entry);
      nfa.add_eps(a.exit, a.entry);
      nfa.add_eps(a.exit, t);
      return {s, t};
    }
    case RegexNode::Kind::Opt: {
      NfaFragment a = build_thompson(nfa, *node.left);
      uint32_t s = nfa.add_state();
      uint32_t t = nfa.add_state();
      nfa.add_eps(s, a.entry);
      nfa.add_eps(s, t);
      nfa.add_eps(a.exit, t);
      return {s, t};
    }
  }
  throw InternalError("unhandled regex node kind");
}

}  // namespace detail

// Builds an NFA for a parsed expression over its effective alphabet.
inline Nfa nfa_from_regex(const ParsedRegex& parsed) {
  Nfa nfa;
  nfa.alphabet = parsed.alphabet;
  detail::NfaFragment f = detail::build_thompson(nfa, *parsed.root);
  nfa.initial.push_back(f.entry);
  nfa.accepting[f.exit] = true;
  return nfa;
}

// Parses `text` and returns the NFA of the denoted language.
inline Nfa parse_regex(const std::string& text,
                       const std::optional<Alphabet>& declared =
                           std::nullopt) {
  return nfa_from_regex(parse_regex_ast(text, declared));
}

}  // namespace monodec

#endif  // MONODEC_NFA_HPP_
