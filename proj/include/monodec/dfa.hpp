#ifndef MONODEC_DFA_HPP_
#define MONODEC_DFA_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "monodec/errors.hpp"
#include "monodec/nfa.hpp"

namespace monodec {

inline constexpr uint32_t kDefaultDfaStateCap = 1u << 20;

// Complete deterministic automaton. The transition function is total:
// delta has num_states * |alphabet| entries, delta[q * |A| + a].
//
// The canonical form produced by minimize_canonical() numbers states in
// breadth-first discovery order from the initial state, with outgoing edges
// explored in alphabet order. Two canonical DFAs recognize the same language
// iff they compare equal member by member.
struct Dfa {
  Alphabet alphabet;
  uint32_t num_states = 0;
  uint32_t initial = 0;
  std::vector<uint32_t> delta;
  std::vector<bool> accepting;

  uint32_t step(uint32_t q, uint32_t sym) const {
    return delta[q * alphabet.size() + sym];
  }

  bool accepts(const std::string& word) const {
    uint32_t q = initial;
    for (char c : word) {
      q = step(q, static_cast<uint32_t>(alphabet.index_of(c)));
    }
    return accepting[q];
  }

  friend bool operator==(const Dfa& a, const Dfa& b) {
    return a.alphabet == b.alphabet && a.num_states == b.num_states &&
           a.initial == b.initial && a.delta == b.delta &&
           a.accepting == b.accepting;
  }
  friend bool operator!=(const Dfa& a, const Dfa& b) { return !(a == b); }
};

namespace detail {

// Moore partition refinement on a complete DFA whose states are all
// reachable. Returns the block id of each state.
inline std::vector<uint32_t> moore_partition(const Dfa& d) {
  const std::size_t k = d.alphabet.size();
  std::vector<uint32_t> block(d.num_states);
  for (uint32_t q = 0; q < d.num_states; ++q) {
    block[q] = d.accepting[q] ? 1 : 0;
  }
  // Each round refines the partition (the signature embeds the current block
  // id), so the block count is non-decreasing; a round that does not grow it
  // leaves the partition unchanged.
  for (;;) {
    std::map<std::vector<uint32_t>, uint32_t> sig_ids;
    std::vector<uint32_t> next(d.num_states);
    for (uint32_t q = 0; q < d.num_states; ++q) {
      std::vector<uint32_t> sig;
      sig.reserve(k + 1);
      sig.push_back(block[q]);
      for (std::size_t a = 0; a < k; ++a) {
        sig.push_back(block[d.step(q, static_cast<uint32_t>(a))]);
      }
      auto [it, inserted] =
          sig_ids.emplace(std::move(sig), static_cast<uint32_t>(sig_ids.size()));
      next[q] = it->second;
    }
    std::size_t old_count =
        std::set<uint32_t>(block.begin(), block.end()).size();
    block = std::move(next);
    if (sig_ids.size() == old_count) return block;
  }
}

// Drops unreachable states (the DFA stays complete).
inline Dfa restrict_reachable(const Dfa& d) {
  const std::size_t k = d.alphabet.size();
  std::vector<uint32_t> order;
  std::vector<uint32_t> rank(d.num_states, UINT32_MAX);
  std::queue<uint32_t> bfs;
  bfs.push(d.initial);
  rank[d.initial] = 0;
  order.push_back(d.initial);
  while (!bfs.empty()) {
    uint32_t q = bfs.front();
    bfs.pop();
    for (std::size_t a = 0; a < k; ++a) {
      uint32_t t = d.step(q, static_cast<uint32_t>(a));
      if (rank[t] == UINT32_MAX) {
        rank[t] = static_cast<uint32_t>(order.size());
        order.push_back(t);
        bfs.push(t);
      }
    }
  }
  Dfa out;
  out.alphabet = d.alphabet;
  out.num_states = static_cast<uint32_t>(order.size());
  out.initial = 0;
  out.delta.assign(out.num_states * k, 0);
  out.accepting.assign(out.num_states, false);
  for (uint32_t i = 0; i < out.num_states; ++i) {
    uint32_t q = order[i];
    out.accepting[i] = d.accepting[q];
    for (std::size_t a = 0; a < k; ++a) {
      out.delta[i * k + a] = rank[d.step(q, static_cast<uint32_t>(a))];
    }
  }
  return out;
}

}  // namespace detail

// Minimizes a complete DFA and renumbers states canonically (BFS order from
// the initial state, edges in alphabet order). Idempotent: applying it to its
// own output returns an identical automaton.
inline Dfa minimize_canonical(const Dfa& d) {
  const std::size_t k = d.alphabet.size();
  Dfa reach = detail::restrict_reachable(d);
  std::vector<uint32_t> block = detail::moore_partition(reach);
  uint32_t blocks = 0;
  for (uint32_t b : block) blocks = std::max(blocks, b + 1);

  Dfa merged;
  merged.alphabet = d.alphabet;
  merged.num_states = blocks;
  merged.initial = block[reach.initial];
  merged.delta.assign(blocks * k, 0);
  merged.accepting.assign(blocks, false);
  for (uint32_t q = 0; q < reach.num_states; ++q) {
    merged.accepting[block[q]] = reach.accepting[q];
    for (std::size_t a = 0; a < k; ++a) {
      merged.delta[block[q] * k + a] =
          block[reach.step(q, static_cast<uint32_t>(a))];
    }
  }
  // BFS renumbering; every block is reachable after the restriction above.
  return detail::restrict_reachable(merged);
}

// Determinizes an NFA into a complete minimal canonical DFA.
// `state_cap` bounds the number of subset-construction states.
inline Dfa compile(const Nfa& nfa, uint32_t state_cap = kDefaultDfaStateCap) {
  const std::size_t k = nfa.alphabet.size();

  auto eps_close = [&nfa](std::vector<bool>& set) {
    std::vector<uint32_t> stack;
    for (uint32_t q = 0; q < nfa.num_states; ++q) {
      if (set[q]) stack.push_back(q);
    }
    while (!stack.empty()) {
      uint32_t q = stack.back();
      stack.pop_back();
      for (uint32_t t : nfa.eps[q]) {
        if (!set[t]) {
          set[t] = true;
          stack.push_back(t);
        }
      }
    }
  };

  std::vector<bool> start(nfa.num_states, false);
  for (uint32_t q : nfa.initial) start[q] = true;
  eps_close(start);

  std::map<std::vector<bool>, uint32_t> ids;
  std::vector<std::vector<bool>> subsets;
  std::vector<uint32_t> delta;
  std::vector<bool> accepting;

  auto intern = [&](std::vector<bool> s) -> uint32_t {
    auto [it, inserted] = ids.emplace(std::move(s), ids.size());
    if (inserted) {
      if (ids.size() > state_cap) {
        throw ResourceLimitError("determinization exceeded the state cap of " +
                                 std::to_string(state_cap));
      }
      subsets.push_back(it->first);
      bool acc = false;
      for (uint32_t q = 0; q < nfa.num_states; ++q) {
        if (it->first[q] && nfa.accepting[q]) acc = true;
      }
      accepting.push_back(acc);
      delta.resize(ids.size() * k, 0);
    }
    return it->second;
  };

  uint32_t init = intern(std::move(start));
  for (uint32_t cur = 0; cur < subsets.size(); ++cur) {
    for (std::size_t a = 0; a < k; ++a) {
      std::vector<bool> next(nfa.num_states, false);
      const std::vector<bool>& src = subsets[cur];
      for (uint32_t q = 0; q < nfa.num_states; ++q) {
        if (!src[q]) continue;
        for (auto [sym, t] : nfa.edges[q]) {
          if (sym == a) next[t] = true;
        }
      }
      eps_close(next);
      uint32_t id = intern(std::move(next));
      delta[cur * k + a] = id;
    }
  }

  Dfa d;
  d.alphabet = nfa.alphabet;
  d.num_states = static_cast<uint32_t>(subsets.size());
  d.initial = init;
  d.delta = std::move(delta);
  d.accepting = std::move(accepting);
  return minimize_canonical(d);
}

enum class BooleanOp { Union, Intersection, Complement, Difference };

// Boolean combination of complete DFAs over the same alphabet; the result is
// minimal and canonical. `right` is ignored for Complement.
inline Dfa dfa_boolean(BooleanOp op, const Dfa& left,
                       const Dfa* right = nullptr) {
  if ((op == BooleanOp::Complement) != (right == nullptr)) {
    throw std::invalid_argument(
        op == BooleanOp::Complement
            ? "complement takes a single operand"
            : "binary boolean operation needs two operands");
  }
  if (op == BooleanOp::Complement) {
    Dfa out = left;
    for (uint32_t q = 0; q < out.num_states; ++q) {
      out.accepting[q] = !out.accepting[q];
    }
    return minimize_canonical(out);
  }
  if (left.alphabet != right->alphabet) {
    throw AlphabetError("operand alphabets differ: '" +
                        left.alphabet.to_string() + "' vs '" +
                        right->alphabet.to_string() + "'");
  }
  const std::size_t k = left.alphabet.size();
  const uint64_t n2 = static_cast<uint64_t>(right->num_states);
  Dfa prod;
  prod.alphabet = left.alphabet;
  prod.num_states = static_cast<uint32_t>(left.num_states * n2);
  prod.initial = static_cast<uint32_t>(left.initial * n2 + right->initial);
  prod.delta.assign(prod.num_states * k, 0);
  prod.accepting.assign(prod.num_states, false);
  for (uint32_t p = 0; p < left.num_states; ++p) {
    for (uint32_t q = 0; q < right->num_states; ++q) {
      uint32_t id = static_cast<uint32_t>(p * n2 + q);
      bool a = left.accepting[p];
      bool b = right->accepting[q];
      prod.accepting[id] = op == BooleanOp::Union          ? (a || b)
                           : op == BooleanOp::Intersection ? (a && b)
                                                           : (a && !b);
      for (std::size_t s = 0; s < k; ++s) {
        prod.delta[id * k + s] = static_cast<uint32_t>(
            left.step(p, static_cast<uint32_t>(s)) * n2 +
            right->step(q, static_cast<uint32_t>(s)));
      }
    }
  }
  return minimize_canonical(prod);
}

// Whether the recognized language is empty.
inline bool dfa_empty(const Dfa& d) {
  Dfa m = minimize_canonical(d);
  for (uint32_t q = 0; q < m.num_states; ++q) {
    if (m.accepting[q]) return false;
  }
  return true;
}

// DFA of the full language A* over `alphabet`.
inline Dfa dfa_universal(const Alphabet& alphabet) {
  Dfa d;
  d.alphabet = alphabet;
  d.num_states = 1;
  d.initial = 0;
  d.delta.assign(alphabet.size(), 0);
  d.accepting.assign(1, true);
  return d;
}

// Parses the JSON automaton document format:
//
//   {
//     "alphabet":    ["a", "b"],
//     "states":      2,
//     "initial":     0,
//     "accepting":   [0],
//     "transitions": [{"from": 0, "on": "a", "to": 1}, ...]
//   }
//
// Missing transitions are completed with a fresh non-accepting sink state;
// the result is minimized and canonicalized.
inline Dfa parse_dfa(const std::string& document) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON document: ") + e.what());
  }
  try {
    if (!doc.is_object()) throw ParseError("top-level value must be an object");
    std::string letters;
    for (const auto& entry : doc.at("alphabet")) {
      std::string s = entry.get<std::string>();
      if (s.size() != 1) {
        throw ParseError("alphabet entries must be 1-character strings");
      }
      letters += s[0];
    }
    Alphabet alphabet(letters);
    if (alphabet.empty()) throw ParseError("alphabet must be nonempty");
    const std::size_t k = alphabet.size();

    int64_t states = doc.at("states").get<int64_t>();
    if (states <= 0) throw ParseError("state count must be positive");
    uint32_t n = static_cast<uint32_t>(states);

    int64_t initial = doc.at("initial").get<int64_t>();
    if (initial < 0 || initial >= states) {
      throw ParseError("initial state out of range");
    }

    std::vector<bool> accepting(n, false);
    for (const auto& entry : doc.at("accepting")) {
      int64_t q = entry.get<int64_t>();
      if (q < 0 || q >= states) throw ParseError("accepting state out of range");
      accepting[static_cast<uint32_t>(q)] = true;
    }

    constexpr uint32_t kHole = UINT32_MAX;
    std::vector<uint32_t> delta(n * k, kHole);
    for (const auto& entry : doc.at("transitions")) {
      int64_t from = entry.at("from").get<int64_t>();
      int64_t to = entry.at("to").get<int64_t>();
      std::string on = entry.at("on").get<std::string>();
      if (from < 0 || from >= states || to < 0 || to >= states) {
        throw ParseError("transition state index out of range");
      }
      if (on.size() != 1 || !alphabet.contains(on[0])) {
        throw ParseError("transition symbol '" + on +
                         "' is not an alphabet letter");
      }
      std::size_t slot =
          static_cast<std::size_t>(from) * k + alphabet.index_of(on[0]);
      if (delta[slot] != kHole) {
        throw ParseError("duplicate transition from state " +
                         std::to_string(from) + " on '" + on + "'");
      }
      delta[slot] = static_cast<uint32_t>(to);
    }

    bool needs_sink =
        std::find(delta.begin(), delta.end(), kHole) != delta.end();
    Dfa d;
    d.alphabet = alphabet;
    d.num_states = n + (needs_sink ? 1 : 0);
    d.initial = static_cast<uint32_t>(initial);
    d.accepting = accepting;
    if (needs_sink) {
      d.accepting.push_back(false);
      uint32_t sink = n;
      for (auto& t : delta) {
        if (t == kHole) t = sink;
      }
      for (std::size_t a = 0; a < k; ++a) delta.push_back(sink);
    }
    d.delta = std::move(delta);
    return minimize_canonical(d);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed automaton document: ") + e.what());
  }
}

}  // namespace monodec

#endif  // MONODEC_DFA_HPP_
