#ifndef MONODEC_MONOID_HPP_
#define MONODEC_MONOID_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "monodec/errors.hpp"

namespace monodec {

using ElementId = uint32_t;
using Bits = boost::dynamic_bitset<>;

// Finite monoid given by its multiplication table. By convention the
// identity is element 0. Idempotent flags and per-element omega powers
// (the unique idempotent among the powers of each element) are precomputed.
struct FiniteMonoid {
  uint32_t size = 0;
  std::vector<ElementId> table;  // size * size, table[s * size + t] = s. t
  std::vector<bool> idempotent;
  std::vector<ElementId> omega;      // omega[s] = s^w
  std::vector<ElementId> generators;  // generating set; defaults to all of M

  ElementId mul(ElementId s, ElementId t) const { return table[s * size + t]; }

  ElementId mul(ElementId a, ElementId b, ElementId c) const {
    return mul(mul(a, b), c);
  }
  ElementId mul(ElementId a, ElementId b, ElementId c, ElementId d) const {
    return mul(mul(mul(a, b), c), d);
  }
  ElementId mul(ElementId a, ElementId b, ElementId c, ElementId d,
                ElementId e) const {
    return mul(mul(mul(mul(a, b), c), d), e);
  }

  // s^w . s, the element usually written s^{w+1}.
  ElementId omega_plus_one(ElementId s) const { return mul(omega[s], s); }

  static FiniteMonoid from_table(uint32_t size, std::vector<ElementId> table) {
    FiniteMonoid m;
    m.size = size;
    m.table = std::move(table);
    m.finalize();
    return m;
  }

  // Recomputes idempotent flags, omega powers and the default generator set.
  void finalize() {
    idempotent.assign(size, false);
    for (ElementId s = 0; s < size; ++s) {
      idempotent[s] = mul(s, s) == s;
    }
    omega.assign(size, 0);
    for (ElementId s = 0; s < size; ++s) {
      // The first idempotent power of s is its unique idempotent power:
      // pre-cycle powers are never idempotent.
      ElementId p = s;
      while (!idempotent[p]) p = mul(p, s);
      omega[s] = p;
    }
    if (generators.empty()) {
      generators.resize(size);
      for (ElementId s = 0; s < size; ++s) generators[s] = s;
    }
  }

  // Full structural validation: identity laws, associativity, flag and
  // omega consistency. Quadratic/cubic, intended for tests and self-checks.
  void validate() const {
    if (size == 0) throw InternalError("monoid has no elements");
    for (ElementId s = 0; s < size; ++s) {
      if (mul(0, s) != s || mul(s, 0) != s) {
        throw InternalError("identity law fails at element " +
                            std::to_string(s));
      }
    }
    for (ElementId a = 0; a < size; ++a) {
      for (ElementId b = 0; b < size; ++b) {
        for (ElementId c = 0; c < size; ++c) {
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
            throw InternalError("associativity fails at (" +
                                std::to_string(a) + ", " + std::to_string(b) +
                                ", " + std::to_string(c) + ")");
          }
        }
      }
    }
    for (ElementId s = 0; s < size; ++s) {
      if (idempotent[s] != (mul(s, s) == s)) {
        throw InternalError("idempotent flag is wrong at element " +
                            std::to_string(s));
      }
      if (!idempotent[omega[s]]) {
        throw InternalError("omega power is not idempotent at element " +
                            std::to_string(s));
      }
      // omega[s] must lie in the cyclic subsemigroup of s.
      ElementId p = s;
      bool found = p == omega[s];
      for (uint32_t i = 0; i < size && !found; ++i) {
        p = mul(p, s);
        found = p == omega[s];
      }
      if (!found) {
        throw InternalError("omega power is outside the cyclic subsemigroup "
                            "of element " +
                            std::to_string(s));
      }
    }
  }
};

// s^w = s^{w+1} for all s.
inline bool is_aperiodic(const FiniteMonoid& m) {
  for (ElementId s = 0; s < m.size; ++s) {
    if (m.omega_plus_one(s) != m.omega[s]) return false;
  }
  return true;
}

// Partial order on a monoid, stored as one bitset row per element:
// row(s) has bit t set iff s <= t.
struct OrderRelation {
  uint32_t size = 0;
  std::vector<Bits> rows;

  bool leq(ElementId s, ElementId t) const { return rows[s].test(t); }

  static OrderRelation equality(uint32_t n) {
    OrderRelation ord;
    ord.size = n;
    ord.rows.assign(n, Bits(n));
    for (uint32_t s = 0; s < n; ++s) ord.rows[s].set(s);
    return ord;
  }

  // Checks reflexivity, antisymmetry, transitivity and compatibility with
  // multiplication. For tests.
  void validate(const FiniteMonoid& m) const {
    for (ElementId s = 0; s < size; ++s) {
      if (!leq(s, s)) throw InternalError("order is not reflexive");
      for (ElementId t = 0; t < size; ++t) {
        if (s != t && leq(s, t) && leq(t, s)) {
          throw InternalError("order is not antisymmetric");
        }
        if (!leq(s, t)) continue;
        if (!rows[t].is_subset_of(rows[s])) {
          throw InternalError("order is not transitive");
        }
      }
    }
    for (ElementId s = 0; s < size; ++s) {
      for (ElementId t = 0; t < size; ++t) {
        if (!leq(s, t)) continue;
        for (ElementId u = 0; u < size; ++u) {
          for (ElementId v = 0; v < size; ++v) {
            if (leq(u, v) && !leq(m.mul(s, u), m.mul(t, v))) {
              throw InternalError("order is not compatible with "
                                  "multiplication");
            }
          }
        }
      }
    }
  }
};

}  // namespace monodec

#endif  // MONODEC_MONOID_HPP_
