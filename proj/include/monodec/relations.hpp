#ifndef MONODEC_RELATIONS_HPP_
#define MONODEC_RELATIONS_HPP_

#include <algorithm>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "monodec/content.hpp"
#include "monodec/syntactic.hpp"

namespace monodec {

// Binary relation over a monoid produced by a separation oracle:
// accepted(s, t) means the preimage of s cannot be separated from the
// preimage of t within the tagged class.
struct PairSet {
  enum class Tag { ST, AT, PolST };

  Tag tag;
  uint32_t size = 0;
  std::vector<Bits> rows;  // rows[s] bit t

  bool accepted(ElementId s, ElementId t) const { return rows[s].test(t); }

  bool is_reflexive() const {
    for (ElementId s = 0; s < size; ++s) {
      if (!rows[s].test(s)) return false;
    }
    return true;
  }

  bool is_symmetric() const {
    for (ElementId s = 0; s < size; ++s) {
      for (ElementId t = 0; t < size; ++t) {
        if (rows[s].test(t) != rows[t].test(s)) return false;
      }
    }
    return true;
  }

  // Closure under componentwise multiplication.
  bool is_multiplication_closed(const FiniteMonoid& m) const {
    for (ElementId s1 = 0; s1 < size; ++s1) {
      for (std::size_t t1 = rows[s1].find_first(); t1 != Bits::npos;
           t1 = rows[s1].find_next(t1)) {
        for (ElementId s2 = 0; s2 < size; ++s2) {
          const Bits& row2 = rows[s2];
          const Bits& target = rows[m.mul(s1, s2)];
          for (std::size_t t2 = row2.find_first(); t2 != Bits::npos;
               t2 = row2.find_next(t2)) {
            if (!target.test(m.mul(static_cast<ElementId>(t1),
                                   static_cast<ElementId>(t2)))) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }
};

// With the trivial class {empty, full} nothing with nonempty preimages can
// be separated, so for a surjective morphism every pair is accepted.
inline PairSet st_pairs(const SyntacticMorphism& sm) {
  PairSet p;
  p.tag = PairSet::Tag::ST;
  p.size = sm.monoid.size;
  p.rows.assign(p.size, Bits(p.size));
  for (auto& row : p.rows) row.set();
  return p;
}

// Alphabet-testable pairs: (s, t) accepted iff some sub-alphabet B has both
// s and t in the exact image of content class B.
inline PairSet at_pairs(const ContentImages& ci) {
  PairSet p;
  p.tag = PairSet::Tag::AT;
  p.size = ci.monoid_size;
  p.rows.assign(p.size, Bits(p.size));
  for (const Bits& im : ci.exact) {
    for (std::size_t s = im.find_first(); s != Bits::npos;
         s = im.find_next(s)) {
      p.rows[s] |= im;
    }
  }
  return p;
}

// Pairs for the polynomial closure of the trivial class: (s, t) accepted iff
// the upward subword closure of the preimage of s meets the preimage of t.
//
// Computed by reachability in the pair graph over M x M whose nodes track
// (image of the word read so far, image of the subword selected so far);
// each letter can be appended to the word alone or to both. (s, t) is
// accepted iff (t, s) is reachable from (1, 1): some word with image t has a
// subword with image s.
inline PairSet polst_pairs(const SyntacticMorphism& sm) {
  const FiniteMonoid& m = sm.monoid;
  const uint32_t n = m.size;
  std::vector<bool> reach(static_cast<std::size_t>(n) * n, false);
  std::queue<std::pair<ElementId, ElementId>> queue;
  reach[0] = true;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [whole, sub] = queue.front();
    queue.pop();
    for (std::size_t a = 0; a < sm.letter_image.size(); ++a) {
      ElementId img = sm.letter_image[a];
      ElementId w2 = m.mul(whole, img);
      for (ElementId s2 : {sub, m.mul(sub, img)}) {
        std::size_t node = static_cast<std::size_t>(w2) * n + s2;
        if (!reach[node]) {
          reach[node] = true;
          queue.emplace(w2, s2);
        }
      }
    }
  }
  PairSet p;
  p.tag = PairSet::Tag::PolST;
  p.size = n;
  p.rows.assign(n, Bits(n));
  for (ElementId s = 0; s < n; ++s) {
    for (ElementId t = 0; t < n; ++t) {
      if (reach[static_cast<std::size_t>(t) * n + s]) p.rows[s].set(t);
    }
  }
  return p;
}

// Family of accepted element sets, represented by its inclusion-maximal
// members (acceptance is closed downward under inclusion).
struct SetFamilyOracle {
  enum class Tag { ST, AT };

  Tag tag;
  uint32_t size = 0;
  std::vector<Bits> maximal;

  // Whether t (nonempty) is accepted.
  bool accepts(const Bits& t) const {
    if (t.none()) {
      throw std::invalid_argument("set-family query on the empty set");
    }
    for (const Bits& s : maximal) {
      if (t.is_subset_of(s)) return true;
    }
    return false;
  }
};

// Every nonempty set is accepted for the trivial class: the only cover of
// the full language uses the full language, which meets every nonempty
// preimage of a surjective morphism.
inline SetFamilyOracle st_sets(const SyntacticMorphism& sm) {
  SetFamilyOracle o;
  o.tag = SetFamilyOracle::Tag::ST;
  o.size = sm.monoid.size;
  Bits all(o.size);
  all.set();
  o.maximal.push_back(std::move(all));
  return o;
}

namespace detail {

// Keeps only inclusion-maximal sets, deduplicated, in first-seen order.
inline std::vector<Bits> maximal_sets(std::vector<Bits> sets) {
  std::vector<Bits> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < sets.size() && !dominated; ++j) {
      if (i == j) continue;
      if (sets[i].is_subset_of(sets[j]) &&
          (sets[i] != sets[j] || j < i)) {
        dominated = true;
      }
    }
    if (!dominated) out.push_back(sets[i]);
  }
  return out;
}

}  // namespace detail

// Alphabet-testable sets: T accepted iff T is included in the exact image of
// some content class. Only the inclusion-maximal images are kept.
inline SetFamilyOracle at_sets(const ContentImages& ci) {
  SetFamilyOracle o;
  o.tag = SetFamilyOracle::Tag::AT;
  o.size = ci.monoid_size;
  o.maximal = detail::maximal_sets(ci.exact);
  return o;
}

// Six-tuple relation backed by the content morphism. A tuple
// (q, r, s, t, e, f) is accepted iff some sub-alphabet B has e and f in the
// exact image of B and q, r, s, t in the cumulative image of B: witnesses
// u_e, u_f of content exactly B then satisfy the two exchange conditions
// cont(u_r u_e u_s) = cont(u_f) and cont(u_q u_f u_t) = cont(u_e), and
// conversely those conditions force this shape.
struct SwapOracle {
  uint32_t size = 0;
  // (anchor, body) per sub-alphabet: anchor = exact image (e, f range),
  // body = cumulative image (q, r, s, t range). Deduplicated.
  std::vector<std::pair<Bits, Bits>> families;

  bool accepts(ElementId q, ElementId r, ElementId s, ElementId t,
               ElementId e, ElementId f) const {
    for (const auto& [anchor, body] : families) {
      if (anchor.test(e) && anchor.test(f) && body.test(q) && body.test(r) &&
          body.test(s) && body.test(t)) {
        return true;
      }
    }
    return false;
  }
};

inline SwapOracle content_swaps(const ContentImages& ci) {
  SwapOracle o;
  o.size = ci.monoid_size;
  for (std::size_t mask = 0; mask < ci.num_masks(); ++mask) {
    std::pair<Bits, Bits> fam{ci.exact[mask], ci.cumulative[mask]};
    if (std::find(o.families.begin(), o.families.end(), fam) ==
        o.families.end()) {
      o.families.push_back(std::move(fam));
    }
  }
  return o;
}

}  // namespace monodec

#endif  // MONODEC_RELATIONS_HPP_
