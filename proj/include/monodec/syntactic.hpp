#ifndef MONODEC_SYNTACTIC_HPP_
#define MONODEC_SYNTACTIC_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "monodec/dfa.hpp"
#include "monodec/monoid.hpp"

namespace monodec {

inline constexpr uint32_t kDefaultMonoidCap = 100000;

// The syntactic morphism of a regular language, realized as the transition
// monoid of its minimal DFA. Elements are the distinct state transformations
// induced by words; element 0 is the identity transformation (the image of
// the empty word). Each element carries its BFS-shortest witness word, ties
// broken lexicographically by exploring letters in alphabet order.
struct SyntacticMorphism {
  FiniteMonoid monoid;
  Alphabet alphabet;
  std::vector<ElementId> letter_image;   // indexed by alphabet position
  std::vector<std::string> witness;      // witness[s]: shortest word with image s
  Bits accepting;                        // F, the accepting element set
  uint32_t dfa_states = 0;

  ElementId image_of_letter(char c) const {
    return letter_image[alphabet.index_of(c)];
  }

  ElementId image_of_word(const std::string& w) const {
    ElementId m = 0;
    for (char c : w) m = monoid.mul(m, image_of_letter(c));
    return m;
  }

  bool in_language(const std::string& w) const {
    return accepting.test(image_of_word(w));
  }
};

// Builds the transition monoid of a minimal complete DFA by BFS closure from
// the letter transformations. Fails with a resource error once more than
// `element_cap` distinct transformations appear.
inline SyntacticMorphism transition_monoid(const Dfa& d,
                                           uint32_t element_cap =
                                               kDefaultMonoidCap) {
  const std::size_t k = d.alphabet.size();
  const uint32_t n = d.num_states;

  std::vector<std::vector<uint32_t>> letter_fn(k, std::vector<uint32_t>(n));
  for (std::size_t a = 0; a < k; ++a) {
    for (uint32_t q = 0; q < n; ++q) {
      letter_fn[a][q] = d.step(q, static_cast<uint32_t>(a));
    }
  }

  std::map<std::vector<uint32_t>, ElementId> ids;
  std::vector<std::vector<uint32_t>> fns;
  std::vector<std::string> witness;

  std::vector<uint32_t> identity(n);
  for (uint32_t q = 0; q < n; ++q) identity[q] = q;
  ids.emplace(identity, 0);
  fns.push_back(std::move(identity));
  witness.emplace_back();

  for (uint32_t cur = 0; cur < fns.size(); ++cur) {
    for (std::size_t a = 0; a < k; ++a) {
      std::vector<uint32_t> next(n);
      for (uint32_t q = 0; q < n; ++q) next[q] = letter_fn[a][fns[cur][q]];
      auto [it, inserted] = ids.emplace(std::move(next),
                                        static_cast<ElementId>(fns.size()));
      if (inserted) {
        if (fns.size() >= element_cap) {
          throw ResourceLimitError(
              "transition monoid exceeded the element cap of " +
              std::to_string(element_cap) + " (DFA has " + std::to_string(n) +
              " states)");
        }
        fns.push_back(it->first);
        witness.push_back(witness[cur] + d.alphabet.letter(a));
      }
    }
  }

  const uint32_t size = static_cast<uint32_t>(fns.size());
  std::vector<ElementId> table(static_cast<std::size_t>(size) * size);
  for (ElementId i = 0; i < size; ++i) {
    for (ElementId j = 0; j < size; ++j) {
      std::vector<uint32_t> comp(n);
      for (uint32_t q = 0; q < n; ++q) comp[q] = fns[j][fns[i][q]];
      table[static_cast<std::size_t>(i) * size + j] = ids.at(comp);
    }
  }

  SyntacticMorphism sm;
  sm.alphabet = d.alphabet;
  sm.dfa_states = n;
  sm.monoid.size = size;
  sm.monoid.table = std::move(table);
  sm.letter_image.resize(k);
  for (std::size_t a = 0; a < k; ++a) {
    sm.monoid.generators.push_back(ids.at(letter_fn[a]));
    sm.letter_image[a] = sm.monoid.generators.back();
  }
  if (sm.monoid.generators.empty()) sm.monoid.generators.push_back(0);
  sm.monoid.finalize();
  sm.witness = std::move(witness);
  sm.accepting = Bits(size);
  for (ElementId s = 0; s < size; ++s) {
    if (d.accepting[fns[s][d.initial]]) sm.accepting.set(s);
  }
  return sm;
}

// The syntactic order: s <= t iff every accepting context of s is an
// accepting context of t, i.e. for all x, y: xsy in F implies xty in F.
// With this direction F is an upper set and the order is compatible with
// multiplication.
inline OrderRelation syntactic_order(const SyntacticMorphism& sm) {
  const FiniteMonoid& m = sm.monoid;
  const uint32_t n = m.size;
  if (n > 1600) {
    // context tables take |M|^3 bits
    throw ResourceLimitError(
        "syntactic-order computation is limited to 1600 elements, got " +
        std::to_string(n) + "; lower the monoid cap");
  }
  std::vector<Bits> contexts(n, Bits(static_cast<std::size_t>(n) * n));
  for (ElementId s = 0; s < n; ++s) {
    for (ElementId x = 0; x < n; ++x) {
      ElementId xs = m.mul(x, s);
      for (ElementId y = 0; y < n; ++y) {
        if (sm.accepting.test(m.mul(xs, y))) {
          contexts[s].set(static_cast<std::size_t>(x) * n + y);
        }
      }
    }
  }
  OrderRelation ord;
  ord.size = n;
  ord.rows.assign(n, Bits(n));
  for (ElementId s = 0; s < n; ++s) {
    for (ElementId t = 0; t < n; ++t) {
      if (contexts[s].is_subset_of(contexts[t])) ord.rows[s].set(t);
    }
  }
  return ord;
}

// Validation: enumerates every word up to `max_len` (clamped so the word
// count stays workable for larger alphabets) and compares morphism membership
// with DFA acceptance.
inline bool recognizes_check(const SyntacticMorphism& sm, const Dfa& d,
                             std::size_t max_len = 10) {
  const std::size_t k = d.alphabet.size();
  if (k == 0) return sm.accepting.test(0) == d.accepting[d.initial];
  while (max_len > 1) {
    double count = 1;
    for (std::size_t i = 0; i < max_len; ++i) count *= static_cast<double>(k);
    if (count <= 250000.0) break;
    --max_len;
  }
  // Iterative deepening over words; state = (monoid element, DFA state).
  struct Frame {
    ElementId m;
    uint32_t q;
  };
  std::vector<Frame> level = {{0, d.initial}};
  if (sm.accepting.test(0) != d.accepting[d.initial]) return false;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Frame> next;
    next.reserve(level.size() * k);
    for (const Frame& f : level) {
      for (std::size_t a = 0; a < k; ++a) {
        Frame g{sm.monoid.mul(f.m, sm.letter_image[a]),
                d.step(f.q, static_cast<uint32_t>(a))};
        if (sm.accepting.test(g.m) != d.accepting[g.q]) return false;
        next.push_back(g);
      }
    }
    level = std::move(next);
  }
  return true;
}

}  // namespace monodec

#endif  // MONODEC_SYNTACTIC_HPP_
