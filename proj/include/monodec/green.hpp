#ifndef MONODEC_GREEN_HPP_
#define MONODEC_GREEN_HPP_

#include <cstdint>
#include <queue>
#include <vector>

#include "monodec/monoid.hpp"

namespace monodec {

// Green preorders and equivalences of a finite monoid. Preorder rows follow
// the divisibility convention: j_rows[t] is the set {s : s <=_J t}, i.e. the
// two-sided ideal M t M, and likewise for L (Mt) and R (tM).
struct GreenData {
  uint32_t size = 0;
  std::vector<Bits> j_rows, l_rows, r_rows, h_rows;
  std::vector<uint32_t> j_class, l_class, r_class, h_class;  // class index
  uint32_t num_j_classes = 0, num_l_classes = 0, num_r_classes = 0,
           num_h_classes = 0;

  bool leq_j(ElementId s, ElementId t) const { return j_rows[t].test(s); }
  bool leq_l(ElementId s, ElementId t) const { return l_rows[t].test(s); }
  bool leq_r(ElementId s, ElementId t) const { return r_rows[t].test(s); }
  bool leq_h(ElementId s, ElementId t) const { return h_rows[t].test(s); }

  bool j_equiv(ElementId s, ElementId t) const {
    return j_class[s] == j_class[t];
  }
  bool h_equiv(ElementId s, ElementId t) const {
    return h_class[s] == h_class[t];
  }
};

namespace detail {

// Numbers the equivalence classes of a preorder (s ~ t iff mutual
// reachability), in order of least element id.
inline uint32_t number_classes(const std::vector<Bits>& rows,
                               std::vector<uint32_t>& cls) {
  const uint32_t n = static_cast<uint32_t>(rows.size());
  cls.assign(n, UINT32_MAX);
  uint32_t next = 0;
  for (ElementId s = 0; s < n; ++s) {
    if (cls[s] != UINT32_MAX) continue;
    cls[s] = next;
    for (ElementId t = s + 1; t < n; ++t) {
      if (cls[t] == UINT32_MAX && rows[t].test(s) && rows[s].test(t)) {
        cls[t] = next;
      }
    }
    ++next;
  }
  return next;
}

enum class Side { Left, Right, Both };

// BFS closure of {t} under multiplication by generators on the given sides.
// With both sides this computes M t M; with one side, Mt or tM.
inline Bits reach_from(const FiniteMonoid& m, ElementId t, Side side) {
  Bits seen(m.size);
  std::queue<ElementId> queue;
  seen.set(t);
  queue.push(t);
  while (!queue.empty()) {
    ElementId u = queue.front();
    queue.pop();
    for (ElementId g : m.generators) {
      if (side != Side::Left) {
        ElementId v = m.mul(u, g);
        if (!seen.test(v)) {
          seen.set(v);
          queue.push(v);
        }
      }
      if (side != Side::Right) {
        ElementId v = m.mul(g, u);
        if (!seen.test(v)) {
          seen.set(v);
          queue.push(v);
        }
      }
    }
  }
  return seen;
}

}  // namespace detail

// Computes all four Green preorders by fixpoint over the left/right Cayley
// graphs of the monoid's generator set.
inline GreenData green_relations(const FiniteMonoid& m) {
  GreenData g;
  g.size = m.size;
  g.j_rows.reserve(m.size);
  g.l_rows.reserve(m.size);
  g.r_rows.reserve(m.size);
  g.h_rows.reserve(m.size);
  for (ElementId t = 0; t < m.size; ++t) {
    g.r_rows.push_back(detail::reach_from(m, t, detail::Side::Right));
    g.l_rows.push_back(detail::reach_from(m, t, detail::Side::Left));
    g.j_rows.push_back(detail::reach_from(m, t, detail::Side::Both));
    g.h_rows.push_back(g.r_rows.back() & g.l_rows.back());
  }
  g.num_j_classes = detail::number_classes(g.j_rows, g.j_class);
  g.num_l_classes = detail::number_classes(g.l_rows, g.l_class);
  g.num_r_classes = detail::number_classes(g.r_rows, g.r_class);
  g.num_h_classes = detail::number_classes(g.h_rows, g.h_class);
  return g;
}

// Every J-class is a singleton.
inline bool is_j_trivial(const GreenData& g) {
  return g.num_j_classes == g.size;
}

}  // namespace monodec

#endif  // MONODEC_GREEN_HPP_
