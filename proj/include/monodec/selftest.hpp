#ifndef MONODEC_SELFTEST_HPP_
#define MONODEC_SELFTEST_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "monodec/deciders.hpp"
#include "monodec/oracles.hpp"

namespace monodec {

// The property battery run by the self-test command on each random instance.
// Returns the name of the first violated property, or nothing when all hold.
inline std::optional<std::string> selftest_battery(
    const RandomInstance& instance,
    std::map<std::string, uint64_t>* counters = nullptr) {
  const SyntacticMorphism& sm = instance.sm;
  const FiniteMonoid& m = sm.monoid;

  auto tally = [&counters](const char* name) {
    if (counters) ++(*counters)[name];
  };
  auto fail = [](const char* name) { return std::optional<std::string>(name); };

  // Structural sanity of the multiplication table and derived data.
  try {
    m.validate();
  } catch (const InternalError&) {
    return fail("monoid-structure");
  }
  tally("monoid-structure");

  GreenData green = green_relations(m);

  // If t <=_J s and s <=_R t then s R t; dually for <=_L.
  for (ElementId s = 0; s < m.size; ++s) {
    for (ElementId t = 0; t < m.size; ++t) {
      if (!green.leq_j(t, s)) continue;
      if (green.leq_r(s, t) && !green.leq_r(t, s)) return fail("green-jlr");
      if (green.leq_l(s, t) && !green.leq_l(t, s)) return fail("green-jlr");
    }
  }
  tally("green-jlr");

  // s H e with e idempotent forces s^w = e.
  for (ElementId e = 0; e < m.size; ++e) {
    if (!m.idempotent[e]) continue;
    for (ElementId s = 0; s < m.size; ++s) {
      if (green.h_class[s] == green.h_class[e] && m.omega[s] != e) {
        return fail("green-h-omega");
      }
    }
  }
  tally("green-h-omega");

  if (!green_equal(green, brute_green(m))) return fail("green-oracle");
  tally("green-oracle");

  PairSet st = st_pairs(sm);
  SetFamilyOracle stset = st_sets(sm);
  bool via_equations =
      check_eq_cacp(sm, st).pass && check_eq_csides(sm, stset).pass;
  if (via_equations != is_j_trivial(green)) return fail("simon-crosscheck");
  tally("simon-crosscheck");

  ContentImages ci = content_images(sm);
  PairSet at = at_pairs(ci);
  PairSet pol = polst_pairs(sm);
  if (!at.is_reflexive() || !at.is_symmetric() ||
      !at.is_multiplication_closed(m)) {
    return fail("pair-closure");
  }
  if (!pol.is_reflexive() || !pol.is_multiplication_closed(m)) {
    return fail("pair-closure");
  }
  tally("pair-closure");

  // (e, ese) is a pair for the polynomial closure, for every idempotent e.
  for (ElementId e = 0; e < m.size; ++e) {
    if (!m.idempotent[e]) continue;
    for (ElementId s = 0; s < m.size; ++s) {
      if (!pol.accepted(e, m.mul(e, s, e))) return fail("polpair-idempotent");
    }
  }
  tally("polpair-idempotent");

  if (check_eq_cacp(sm, st).pass != check_eq_capolcp(sm, pol).pass) {
    return fail("pol-equivalence");
  }
  tally("pol-equivalence");

  if (check_eq_swap(sm, content_swaps(ci)).pass !=
      check_eq_csides(sm, at_sets(ci)).pass) {
    return fail("at-equivalence");
  }
  tally("at-equivalence");

  std::vector<Bits> enumerated =
      enumerate_images(sm, image_stabilization_bound(sm));
  if (enumerated != ci.exact) return fail("images-oracle");
  tally("images-oracle");

  // Full pipeline: the chain and double-route assertions live inside.
  try {
    analyze(instance.dfa);
  } catch (const InternalError&) {
    return fail("analyze-consistency");
  }
  tally("analyze-consistency");

  return std::nullopt;
}

// Runs the battery on `count` seeded instances. Returns 0 when every
// property holds, 4 otherwise (printing the reproducing seed).
inline int run_selftest(uint64_t seed, uint64_t count, std::ostream& out) {
  std::map<std::string, uint64_t> counters;
  for (uint64_t i = 0; i < count; ++i) {
    RandomMorphismSpec spec;
    spec.seed = seed + i;
    RandomInstance instance = random_instance(spec);
    std::optional<std::string> violated = selftest_battery(instance, &counters);
    if (violated) {
      out << "FAIL " << *violated << " (reproduce with seed "
          << spec.seed << ")\n";
      return 4;
    }
  }
  for (const auto& [name, n] : counters) {
    out << "ok " << name << ": " << n << "/" << count << "\n";
  }
  out << "self-test passed on " << count << " random instances\n";
  return 0;
}

}  // namespace monodec

#endif  // MONODEC_SELFTEST_HPP_
