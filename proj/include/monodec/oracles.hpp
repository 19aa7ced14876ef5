#ifndef MONODEC_ORACLES_HPP_
#define MONODEC_ORACLES_HPP_

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "monodec/content.hpp"
#include "monodec/dfa.hpp"
#include "monodec/green.hpp"
#include "monodec/syntactic.hpp"

namespace monodec {

// DFA of the upward subword closure of L(d): all words having some member of
// L(d) as a scattered subword. Standard construction: a nondeterministic
// copy of d with a self-loop on every letter at every state, determinized
// and minimized.
inline Dfa subword_upclosure(const Dfa& d,
                             uint32_t state_cap = kDefaultDfaStateCap) {
  Nfa nfa;
  nfa.alphabet = d.alphabet;
  const std::size_t k = d.alphabet.size();
  for (uint32_t q = 0; q < d.num_states; ++q) nfa.add_state();
  for (uint32_t q = 0; q < d.num_states; ++q) {
    nfa.accepting[q] = d.accepting[q];
    for (std::size_t a = 0; a < k; ++a) {
      nfa.add_edge(q, static_cast<uint32_t>(a), d.step(q, static_cast<uint32_t>(a)));
      nfa.add_edge(q, static_cast<uint32_t>(a), q);
    }
  }
  nfa.initial.push_back(d.initial);
  return compile(nfa, state_cap);
}

// Green preorders straight from the definitions: s <=_J t iff s = x t y for
// some x, y, and one-sided variants. Cubic; the guard keeps it an oracle.
inline GreenData brute_green(const FiniteMonoid& m) {
  if (m.size > 200) {
    throw ResourceLimitError(
        "brute-force Green oracle is limited to 200 elements, got " +
        std::to_string(m.size));
  }
  GreenData g;
  g.size = m.size;
  g.j_rows.assign(m.size, Bits(m.size));
  g.l_rows.assign(m.size, Bits(m.size));
  g.r_rows.assign(m.size, Bits(m.size));
  g.h_rows.assign(m.size, Bits(m.size));
  for (ElementId t = 0; t < m.size; ++t) {
    for (ElementId x = 0; x < m.size; ++x) {
      ElementId xt = m.mul(x, t);
      g.l_rows[t].set(xt);
      ElementId tx = m.mul(t, x);
      g.r_rows[t].set(tx);
      for (ElementId y = 0; y < m.size; ++y) {
        g.j_rows[t].set(m.mul(xt, y));
      }
    }
    g.h_rows[t] = g.l_rows[t] & g.r_rows[t];
  }
  g.num_j_classes = detail::number_classes(g.j_rows, g.j_class);
  g.num_l_classes = detail::number_classes(g.l_rows, g.l_class);
  g.num_r_classes = detail::number_classes(g.r_rows, g.r_class);
  g.num_h_classes = detail::number_classes(g.h_rows, g.h_class);
  return g;
}

inline bool green_equal(const GreenData& a, const GreenData& b) {
  return a.j_rows == b.j_rows && a.l_rows == b.l_rows &&
         a.r_rows == b.r_rows && a.h_rows == b.h_rows;
}

// For each sub-alphabet mask B, the set of images of words of content
// exactly B and length at most max_len, computed by induction on the length.
// Exact once max_len reaches 2^|A| * |M|, the diameter bound of the content
// product graph.
inline std::vector<Bits> enumerate_images(const SyntacticMorphism& sm,
                                          std::size_t max_len,
                                          uint64_t budget = 100000000) {
  const std::size_t k = sm.alphabet.size();
  if (k > kMaxContentAlphabet) {
    throw ResourceLimitError("alphabet too large for image enumeration");
  }
  const uint32_t n = sm.monoid.size;
  const std::size_t masks = static_cast<std::size_t>(1) << k;
  if (masks * n > (std::size_t{1} << 28)) {
    throw ResourceLimitError("image enumeration table too large");
  }

  std::vector<Bits> result(masks, Bits(n));
  result[0].set(0);
  // frontier: (mask, element) pairs reached by words of the current length.
  std::vector<bool> reached(masks * n, false);
  reached[0] = true;
  std::vector<std::pair<uint32_t, ElementId>> frontier = {{0, 0}};
  for (std::size_t len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<std::pair<uint32_t, ElementId>> next;
    for (auto [mask, elem] : frontier) {
      if (budget < k) {
        throw ResourceLimitError("image enumeration budget exceeded");
      }
      budget -= k;
      for (std::size_t a = 0; a < k; ++a) {
        uint32_t mask2 = mask | (1u << a);
        ElementId m2 = sm.monoid.mul(elem, sm.letter_image[a]);
        std::size_t node = static_cast<std::size_t>(mask2) * n + m2;
        if (!reached[node]) {
          reached[node] = true;
          result[mask2].set(m2);
          next.emplace_back(mask2, m2);
        }
      }
    }
    frontier = std::move(next);
  }
  return result;
}

// The exactness bound for enumerate_images: 2^|A| * |M|.
inline std::size_t image_stabilization_bound(const SyntacticMorphism& sm) {
  return (static_cast<std::size_t>(1) << sm.alphabet.size()) * sm.monoid.size;
}

// Reproducible random-morphism source. Generation is a pure function of the
// spec: the same seed always yields the same morphism.
struct RandomMorphismSpec {
  uint64_t seed = 0;
  uint32_t max_states = 5;
  uint32_t max_alphabet = 3;
  uint32_t monoid_cap = 120;
  uint32_t max_retries = 64;
};

namespace detail {

// Engine-stable bounded draw (std::uniform_int_distribution is not pinned
// across standard libraries).
inline uint64_t draw(std::mt19937_64& rng, uint64_t bound) {
  return rng() % bound;
}

}  // namespace detail

// Uniformly samples a complete DFA under the spec and returns it minimized
// and canonicalized.
inline Dfa random_dfa(std::mt19937_64& rng, uint32_t max_states,
                      uint32_t max_alphabet) {
  uint32_t n = 1 + static_cast<uint32_t>(detail::draw(rng, max_states));
  uint32_t k = 1 + static_cast<uint32_t>(detail::draw(rng, max_alphabet));
  Dfa d;
  d.alphabet = Alphabet(std::string("abcdefghijklmnopqrstuvwxyz").substr(0, k));
  d.num_states = n;
  d.initial = 0;
  d.delta.resize(static_cast<std::size_t>(n) * k);
  d.accepting.resize(n);
  for (auto& t : d.delta) t = static_cast<uint32_t>(detail::draw(rng, n));
  for (uint32_t q = 0; q < n; ++q) d.accepting[q] = detail::draw(rng, 2) == 1;
  return minimize_canonical(d);
}

// Random minimal DFA together with its transition monoid, for callers that
// need both.
struct RandomInstance {
  Dfa dfa;
  SyntacticMorphism sm;
};

// Samples under the spec, resampling (boundedly, on the same deterministic
// stream) when the transition monoid overflows the cap. The morphism is
// surjective by construction.
inline RandomInstance random_instance(const RandomMorphismSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  for (uint32_t attempt = 0; attempt <= spec.max_retries; ++attempt) {
    Dfa d = random_dfa(rng, spec.max_states, spec.max_alphabet);
    try {
      SyntacticMorphism sm = transition_monoid(d, spec.monoid_cap);
      return RandomInstance{std::move(d), std::move(sm)};
    } catch (const ResourceLimitError&) {
      // next attempt continues the same deterministic stream
    }
  }
  throw ResourceLimitError(
      "random morphism generation kept exceeding the monoid cap of " +
      std::to_string(spec.monoid_cap));
}

inline SyntacticMorphism random_morphism(const RandomMorphismSpec& spec) {
  return random_instance(spec).sm;
}

}  // namespace monodec

#endif  // MONODEC_ORACLES_HPP_
