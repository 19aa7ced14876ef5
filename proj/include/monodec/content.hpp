#ifndef MONODEC_CONTENT_HPP_
#define MONODEC_CONTENT_HPP_

#include <cstdint>
#include <queue>
#include <vector>

#include "monodec/syntactic.hpp"

namespace monodec {

// Content-image tables of a syntactic morphism: for each sub-alphabet B of
// the effective alphabet (addressed as a bitmask over alphabet positions),
//
//   exact[B]      = { image of w : w has content exactly B }
//   cumulative[B] = { image of w : w has content included in B } = image(B*)
//
// Both are computed by one reachability pass over the product graph with
// nodes (content mask, element) and edges "append letter a": (C, m) ->
// (C | {a}, m . image(a)), starting from (empty, identity).
struct ContentImages {
  Alphabet alphabet;
  uint32_t monoid_size = 0;
  std::vector<Bits> exact;
  std::vector<Bits> cumulative;

  std::size_t num_masks() const { return exact.size(); }
};

// The alphabet-size guard: the tables are exponential in |A| by nature.
inline constexpr std::size_t kMaxContentAlphabet = 16;

inline ContentImages content_images(const SyntacticMorphism& sm) {
  const std::size_t k = sm.alphabet.size();
  if (k > kMaxContentAlphabet) {
    throw ResourceLimitError(
        "content-image tables need 2^|alphabet| sets; alphabet size " +
        std::to_string(k) + " exceeds the supported maximum of " +
        std::to_string(kMaxContentAlphabet));
  }
  const uint32_t n = sm.monoid.size;
  const std::size_t masks = static_cast<std::size_t>(1) << k;
  if (masks * n > (std::size_t{1} << 28)) {
    throw ResourceLimitError(
        "content-image tables need 2^|alphabet| * |monoid| cells (" +
        std::to_string(masks * n) + "); lower the monoid cap or the alphabet");
  }

  ContentImages ci;
  ci.alphabet = sm.alphabet;
  ci.monoid_size = n;
  ci.exact.assign(masks, Bits(n));

  std::vector<bool> seen(masks * n, false);
  std::queue<std::pair<uint32_t, ElementId>> queue;
  seen[0 * n + 0] = true;
  ci.exact[0].set(0);
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [mask, m] = queue.front();
    queue.pop();
    for (std::size_t a = 0; a < k; ++a) {
      uint32_t mask2 = mask | (1u << a);
      ElementId m2 = sm.monoid.mul(m, sm.letter_image[a]);
      if (!seen[static_cast<std::size_t>(mask2) * n + m2]) {
        seen[static_cast<std::size_t>(mask2) * n + m2] = true;
        ci.exact[mask2].set(m2);
        queue.emplace(mask2, m2);
      }
    }
  }

  ci.cumulative.assign(masks, Bits(n));
  for (std::size_t mask = 0; mask < masks; ++mask) {
    ci.cumulative[mask] = ci.exact[mask];
    // Union of exact images over all submasks, assembled incrementally.
    for (std::size_t a = 0; a < k; ++a) {
      if (mask & (static_cast<std::size_t>(1) << a)) {
        ci.cumulative[mask] |=
            ci.cumulative[mask ^ (static_cast<std::size_t>(1) << a)];
      }
    }
  }
  return ci;
}

}  // namespace monodec

#endif  // MONODEC_CONTENT_HPP_
