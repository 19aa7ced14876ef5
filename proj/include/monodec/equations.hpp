#ifndef MONODEC_EQUATIONS_HPP_
#define MONODEC_EQUATIONS_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monodec/relations.hpp"
#include "monodec/syntactic.hpp"

namespace monodec {

inline constexpr uint64_t kDefaultTupleBudget = 400000000;

struct EquationFailure {
  std::string equation;
  std::vector<std::string> roles;     // role name per element below
  std::vector<ElementId> elements;
  ElementId lhs_value = 0;
  ElementId rhs_value = 0;
  std::vector<std::string> words;     // witness word per element
};

// Outcome of one equation check. On failure, the reported tuple is the
// least failing one in the checker's canonical enumeration order, so the
// witness is deterministic.
struct EquationVerdict {
  bool pass = true;
  std::optional<EquationFailure> failure;
};

namespace detail {

inline void insert_unique(std::vector<ElementId>& v, ElementId x) {
  if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
}

inline EquationFailure make_failure(const SyntacticMorphism& sm,
                                    std::string equation,
                                    std::vector<std::string> roles,
                                    std::vector<ElementId> elements,
                                    ElementId lhs, ElementId rhs) {
  EquationFailure f;
  f.equation = std::move(equation);
  f.roles = std::move(roles);
  f.elements = std::move(elements);
  f.lhs_value = lhs;
  f.rhs_value = rhs;
  f.words.reserve(f.elements.size());
  for (ElementId s : f.elements) f.words.push_back(sm.witness[s]);
  return f;
}

}  // namespace detail

// s^{w+1} <= s^w t s^w for every accepted pair (s, t), in the given order.
// Enumeration: lexicographic on (s, t).
inline EquationVerdict check_pol_equation(const SyntacticMorphism& sm,
                                          const OrderRelation& ord,
                                          const PairSet& pairs) {
  const FiniteMonoid& m = sm.monoid;
  for (ElementId s = 0; s < m.size; ++s) {
    ElementId lhs = m.omega_plus_one(s);
    for (ElementId t = 0; t < m.size; ++t) {
      if (!pairs.accepted(s, t)) continue;
      ElementId rhs = m.mul(m.omega[s], t, m.omega[s]);
      if (!ord.leq(lhs, rhs)) {
        EquationVerdict v;
        v.pass = false;
        v.failure = detail::make_failure(sm, "pol-pair", {"s", "t"}, {s, t},
                                         lhs, rhs);
        return v;
      }
    }
  }
  return EquationVerdict{};
}

// (eset)^{w+1} = (eset)^w et (eset)^w for every accepted pair (e, s) with e
// idempotent and every t. Enumeration: lexicographic on (e, s, t).
inline EquationVerdict check_eq_cacp(const SyntacticMorphism& sm,
                                     const PairSet& pairs) {
  const FiniteMonoid& m = sm.monoid;
  for (ElementId e = 0; e < m.size; ++e) {
    if (!m.idempotent[e]) continue;
    for (ElementId s = 0; s < m.size; ++s) {
      if (!pairs.accepted(e, s)) continue;
      ElementId ese = m.mul(e, s, e);
      for (ElementId t = 0; t < m.size; ++t) {
        ElementId x = m.mul(ese, t);
        ElementId lhs = m.omega_plus_one(x);
        ElementId rhs = m.mul(m.omega[x], m.mul(e, t), m.omega[x]);
        if (lhs != rhs) {
          EquationVerdict v;
          v.pass = false;
          v.failure = detail::make_failure(sm, "bpol-pair", {"e", "s", "t"},
                                           {e, s, t}, lhs, rhs);
          return v;
        }
      }
    }
  }
  return EquationVerdict{};
}

// s^{w+1} = s^w t s^w for every accepted pair whose first component plays t
// and second component plays s. Enumeration: lexicographic on (t, s).
inline EquationVerdict check_eq_capolcp(const SyntacticMorphism& sm,
                                        const PairSet& pol_pairs) {
  const FiniteMonoid& m = sm.monoid;
  for (ElementId t = 0; t < m.size; ++t) {
    for (ElementId s = 0; s < m.size; ++s) {
      if (!pol_pairs.accepted(t, s)) continue;
      ElementId lhs = m.omega_plus_one(s);
      ElementId rhs = m.mul(m.omega[s], t, m.omega[s]);
      if (lhs != rhs) {
        EquationVerdict v;
        v.pass = false;
        v.failure = detail::make_failure(sm, "bpol-polpair", {"t", "s"},
                                         {t, s}, lhs, rhs);
        return v;
      }
    }
  }
  return EquationVerdict{};
}

namespace detail {

// Shared engine for the two six-tuple equations
//
//   (eqfre)^w (esfte)^w = (eqfre)^w qft (esfte)^w
//
// quantified over tuples (q, r, s, t, e, f) with e, f idempotent that are
// accepted by a family-shaped oracle: the tuple is accepted iff some family
// (anchor, body) has e, f in anchor and q, r, s, t in body.
//
// The pass/fail decision runs family by family with (e, f) in the outer
// loops. For fixed (e, f) both omega factors are values of the same product
// table P(u, v) = ((e u f) (v e))^w, so the check collapses to: for all
// q, t in the body and all values x of row q and y of column t of P,
// x y = x (q f t) y. This is equivalent to the tuple-by-tuple enumeration
// because the equation depends on (q, r, s, t) only through (q, t, x, y).
//
// When a failure exists, the canonical witness is the least failing tuple
// in lexicographic order on (e, f, q, r, s, t): within a family the first
// failing (e, f) pins the minimum and the (q, r, s, t) part is recovered in
// order against the loaded tables; the global minimum is then taken across
// families (every accepted tuple lies in some family). `budget` bounds the
// total work in elementary operations.
class SixTupleChecker {
 public:
  SixTupleChecker(const SyntacticMorphism& sm,
                  const std::vector<std::pair<Bits, Bits>>& families,
                  std::string equation_name, uint64_t budget)
      : sm_(sm),
        m_(sm.monoid),
        families_(families),
        equation_(std::move(equation_name)),
        budget_(budget) {}

  EquationVerdict run() {
    std::optional<Tuple6> best;
    for (const auto& family : families_) {
      std::optional<Tuple6> found = family_min_failure(family);
      if (found && (!best || *found < *best)) best = found;
    }
    if (!best) return EquationVerdict{};
    auto [e, f, q, r, s, t] = *best;
    ElementId x = m_.omega[m_.mul(e, q, f, r, e)];
    ElementId y = m_.omega[m_.mul(e, s, f, t, e)];
    EquationVerdict v;
    v.pass = false;
    v.failure = make_failure(sm_, equation_, {"q", "r", "s", "t", "e", "f"},
                             {q, r, s, t, e, f}, m_.mul(x, y),
                             m_.mul(x, m_.mul(q, f, t), y));
    return v;
  }

 private:
  // Enumeration key: (e, f, q, r, s, t), the canonical order.
  using Tuple6 = std::array<ElementId, 6>;

  void spend(uint64_t units) {
    if (units > budget_) {
      throw ResourceLimitError(
          "six-tuple equation check exceeded the tuple budget (largest "
          "quantified set has " +
          std::to_string(largest_family_) + " elements)");
    }
    budget_ -= units;
  }

  static std::vector<ElementId> to_list(const Bits& set) {
    std::vector<ElementId> out;
    for (std::size_t i = set.find_first(); i != Bits::npos;
         i = set.find_next(i)) {
      out.push_back(static_cast<ElementId>(i));
    }
    return out;
  }

  // Grouped value pairs: for each first component, the deduplicated second
  // components seen with it.
  struct PairGroups {
    std::vector<ElementId> keys;
    std::vector<std::vector<ElementId>> values;

    void add(ElementId key, ElementId value) {
      std::size_t i = 0;
      while (i < keys.size() && keys[i] != key) ++i;
      if (i == keys.size()) {
        keys.push_back(key);
        values.emplace_back();
      }
      insert_unique(values[i], value);
    }
    void clear() {
      keys.clear();
      values.clear();
    }
  };

  // Least failing tuple within one family, or nothing if the family
  // satisfies the equation. Since (e, f) lead the enumeration order, the
  // first failing (e, f) pair pins the minimum; the (q, r, s, t) part is
  // then recovered in lexicographic order.
  std::optional<Tuple6> family_min_failure(
      const std::pair<Bits, Bits>& family) {
    std::vector<ElementId> anchor_idem;
    for (std::size_t i = family.first.find_first(); i != Bits::npos;
         i = family.first.find_next(i)) {
      if (m_.idempotent[i]) anchor_idem.push_back(static_cast<ElementId>(i));
    }
    const std::vector<ElementId> body = to_list(family.second);
    largest_family_ = std::max(largest_family_, body.size());
    if (anchor_idem.empty() || body.empty()) return std::nullopt;

    const std::size_t nb = body.size();
    left_.assign(nb, 0);
    right_.assign(nb, 0);
    ft_.assign(nb, 0);
    row_vals_.assign(nb, {});
    col_vals_.assign(nb, {});
    PairGroups by_x, by_y;

    for (ElementId e : anchor_idem) {
      for (ElementId f : anchor_idem) {
        spend(3 * nb + nb * nb);
        for (std::size_t i = 0; i < nb; ++i) {
          left_[i] = m_.mul(e, body[i], f);   // e u f
          right_[i] = m_.mul(body[i], e);     // v e
          ft_[i] = m_.mul(f, body[i]);        // f t
          row_vals_[i].clear();
          col_vals_[i].clear();
        }
        // P(u, v) = ((e u f)(v e))^w; rows index q, columns index t.
        for (std::size_t i = 0; i < nb; ++i) {
          for (std::size_t j = 0; j < nb; ++j) {
            ElementId p = m_.omega[m_.mul(left_[i], right_[j])];
            insert_unique(row_vals_[i], p);
            insert_unique(col_vals_[j], p);
          }
        }
        // The equation for (q, r, s, t) depends only on x = P(q, r),
        // y = P(s, t) and the products u = x q, w = (f t) y:
        //   x y  =  x q f t y  =  u w.
        // Group the reachable u by x and w by y; the family satisfies the
        // equation at (e, f) iff the grouped comparison never fails.
        by_x.clear();
        by_y.clear();
        uint64_t build = 0;
        for (std::size_t i = 0; i < nb; ++i) {
          for (ElementId x : row_vals_[i]) by_x.add(x, m_.mul(x, body[i]));
          for (ElementId y : col_vals_[i]) by_y.add(y, m_.mul(ft_[i], y));
          build += row_vals_[i].size() + col_vals_[i].size() + 1;
        }
        spend(build);
        bool fails = false;
        for (std::size_t xi = 0; xi < by_x.keys.size() && !fails; ++xi) {
          for (std::size_t yi = 0; yi < by_y.keys.size() && !fails; ++yi) {
            ElementId xy = m_.mul(by_x.keys[xi], by_y.keys[yi]);
            spend(by_x.values[xi].size() * by_y.values[yi].size());
            for (ElementId u : by_x.values[xi]) {
              for (ElementId w : by_y.values[yi]) {
                if (m_.mul(u, w) != xy) fails = true;
              }
            }
          }
        }
        if (fails) return min_qrst(e, f, body);
      }
    }
    return std::nullopt;
  }

  // Whether some (t, y) column pair fails against the fixed row value x of
  // row q; left_/right_/ft_/col_vals_ hold the tables of the current (e, f).
  bool exists_column_failure(ElementId x, ElementId q, std::size_t nb) {
    spend(nb);
    ElementId xq = m_.mul(x, q);
    for (std::size_t ti = 0; ti < nb; ++ti) {
      ElementId xqft = m_.mul(xq, ft_[ti]);
      for (ElementId y : col_vals_[ti]) {
        if (m_.mul(xqft, y) != m_.mul(x, y)) return true;
      }
    }
    return false;
  }

  // Lexicographically least failing (q, r, s, t) for the fixed (e, f) whose
  // tables are currently loaded. Only called when a failure exists.
  Tuple6 min_qrst(ElementId e, ElementId f,
                  const std::vector<ElementId>& body) {
    const std::size_t nb = body.size();
    for (std::size_t qi = 0; qi < nb; ++qi) {
      ElementId q = body[qi];
      bool q_fails = false;
      for (ElementId x : row_vals_[qi]) {
        if (exists_column_failure(x, q, nb)) {
          q_fails = true;
          break;
        }
      }
      if (!q_fails) continue;
      ElementId qf = m_.mul(q, f);
      for (std::size_t ri = 0; ri < nb; ++ri) {
        ElementId x = m_.omega[m_.mul(left_[qi], right_[ri])];
        if (!exists_column_failure(x, q, nb)) continue;
        spend(nb * nb);
        for (std::size_t si = 0; si < nb; ++si) {
          for (std::size_t ti = 0; ti < nb; ++ti) {
            ElementId y = m_.omega[m_.mul(left_[si], right_[ti])];
            ElementId c = m_.mul(qf, body[ti]);
            if (m_.mul(m_.mul(x, c), y) != m_.mul(x, y)) {
              return Tuple6{e, f, q, body[ri], body[si], body[ti]};
            }
          }
        }
      }
    }
    throw InternalError(
        "six-tuple check flagged a failure but the witness scan found none");
  }

  const SyntacticMorphism& sm_;
  const FiniteMonoid& m_;
  const std::vector<std::pair<Bits, Bits>>& families_;
  std::string equation_;
  uint64_t budget_;
  std::size_t largest_family_ = 0;
  std::vector<ElementId> left_, right_, ft_;
  std::vector<std::vector<ElementId>> row_vals_, col_vals_;
};

}  // namespace detail

// (eqfre)^w (esfte)^w = (eqfre)^w qft (esfte)^w for every accepted set
// {q, r, s, t, e, f} with e, f idempotent. Witness enumeration order is
// lexicographic on (e, f, q, r, s, t).
inline EquationVerdict check_eq_csides(const SyntacticMorphism& sm,
                                       const SetFamilyOracle& sets,
                                       uint64_t budget = kDefaultTupleBudget) {
  std::vector<std::pair<Bits, Bits>> families;
  families.reserve(sets.maximal.size());
  for (const Bits& s : sets.maximal) families.emplace_back(s, s);
  return detail::SixTupleChecker(sm, families, "bpol-set", budget).run();
}

// Same equation quantified over accepted swap tuples.
inline EquationVerdict check_eq_swap(const SyntacticMorphism& sm,
                                     const SwapOracle& swaps,
                                     uint64_t budget = kDefaultTupleBudget) {
  return detail::SixTupleChecker(sm, swaps.families, "bpol-swap", budget)
      .run();
}

}  // namespace monodec

#endif  // MONODEC_EQUATIONS_HPP_
