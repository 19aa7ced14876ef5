#include <catch_amalgamated.hpp>

#include "helpers.hpp"
#include "monodec/equations.hpp"
#include "monodec/oracles.hpp"

using namespace monodec;
using test::elem;
using test::sm_of;

TEST_CASE("ordered pair equation (polynomial closure membership)") {
  SECTION("trivial monoid passes with any oracle") {
    SyntacticMorphism sm = sm_of("(a|b)*");
    CHECK(check_pol_equation(sm, syntactic_order(sm), st_pairs(sm)).pass);
  }

  SECTION("contains-an-a passes under all pairs (needs 1 <= z)") {
    SyntacticMorphism sm = sm_of("(a|b)*a(a|b)*");
    CHECK(check_pol_equation(sm, syntactic_order(sm), st_pairs(sm)).pass);
  }

  SECTION("b* fails under all pairs at (s,t) = (1,z)") {
    SyntacticMorphism sm = sm_of("b*", std::string("ab"));
    EquationVerdict v =
        check_pol_equation(sm, syntactic_order(sm), st_pairs(sm));
    REQUIRE_FALSE(v.pass);
    CHECK(v.failure->elements == std::vector<ElementId>{0, elem(sm, "a")});
  }

  SECTION("(ab)* fails under alphabet-testable pairs") {
    SyntacticMorphism sm = sm_of("(ab)*");
    EquationVerdict v = check_pol_equation(sm, syntactic_order(sm),
                                           at_pairs(content_images(sm)));
    REQUIRE_FALSE(v.pass);
    REQUIRE(v.failure.has_value());
    // least failing pair in (s, t) order: s = ab with t = a,
    // since ab is not below ab.a.ab = 0
    CHECK(v.failure->elements ==
          std::vector<ElementId>{elem(sm, "ab"), elem(sm, "a")});
    CHECK(v.failure->words == std::vector<std::string>{"ab", "a"});
    CHECK(v.failure->lhs_value == elem(sm, "ab"));
    CHECK(v.failure->rhs_value == elem(sm, "aa"));
    // the cited pair (ab, ba) also violates the equation
    OrderRelation ord = syntactic_order(sm);
    ElementId ab = elem(sm, "ab"), ba = elem(sm, "ba");
    CHECK_FALSE(ord.leq(sm.monoid.omega_plus_one(ab),
                        sm.monoid.mul(sm.monoid.omega[ab], ba,
                                      sm.monoid.omega[ab])));
  }
}

TEST_CASE("idempotent pair equation") {
  SECTION("trivial monoid passes") {
    SyntacticMorphism sm = sm_of("(a|b)*");
    CHECK(check_eq_cacp(sm, st_pairs(sm)).pass);
  }

  SECTION("(aa)* fails under alphabet-testable pairs at (e,s,t) = (1,g,1)") {
    SyntacticMorphism sm = sm_of("(aa)*");
    EquationVerdict v = check_eq_cacp(sm, at_pairs(content_images(sm)));
    REQUIRE_FALSE(v.pass);
    CHECK(v.failure->elements ==
          std::vector<ElementId>{0, elem(sm, "a"), 0});
    CHECK(v.failure->lhs_value == elem(sm, "a"));   // g^{w+1} = g
    CHECK(v.failure->rhs_value == elem(sm, ""));    // g^w 1 g^w = 1
  }

  SECTION("(ab)* fails under all pairs at (e,s,t) = (1,a,b)") {
    SyntacticMorphism sm = sm_of("(ab)*");
    EquationVerdict v = check_eq_cacp(sm, st_pairs(sm));
    REQUIRE_FALSE(v.pass);
    CHECK(v.failure->elements ==
          std::vector<ElementId>{0, elem(sm, "a"), elem(sm, "b")});
    CHECK(v.failure->lhs_value == elem(sm, "ab"));
    CHECK(v.failure->rhs_value == elem(sm, "aa"));
  }

  SECTION("(ab)* passes under alphabet-testable pairs") {
    SyntacticMorphism sm = sm_of("(ab)*");
    CHECK(check_eq_cacp(sm, at_pairs(content_images(sm))).pass);
  }
}

TEST_CASE("set-quantified equation") {
  SECTION("trivial monoid passes") {
    SyntacticMorphism sm = sm_of("(a|b)*");
    CHECK(check_eq_csides(sm, st_sets(sm)).pass);
  }

  SECTION("(aa)* fails under alphabet-testable sets") {
    SyntacticMorphism sm = sm_of("(aa)*");
    EquationVerdict v = check_eq_csides(sm, at_sets(content_images(sm)));
    REQUIRE_FALSE(v.pass);
    ElementId g = elem(sm, "a");
    // least failing tuple in (e,f,q,r,s,t) order has q=r=s=1, t=g, e=f=1
    CHECK(v.failure->roles ==
          std::vector<std::string>{"q", "r", "s", "t", "e", "f"});
    CHECK(v.failure->elements == std::vector<ElementId>{0, 0, 0, g, 0, 0});
    CHECK(v.failure->lhs_value == 0);
    CHECK(v.failure->rhs_value == g);
    // the cited witness (q,r,s,t,e,f) = (g,1,1,1,1,1) also fails
    CHECK(sm.monoid.mul(0, g, 0) == g);
  }

  SECTION("(ab)* passes under alphabet-testable sets") {
    SyntacticMorphism sm = sm_of("(ab)*");
    CHECK(check_eq_csides(sm, at_sets(content_images(sm))).pass);
  }

  SECTION("(ab)* fails under all sets (piecewise-testability route)") {
    SyntacticMorphism sm = sm_of("(ab)*");
    CHECK_FALSE(check_eq_csides(sm, st_sets(sm)).pass);
  }

  SECTION("tuple budget raises a resource error") {
    SyntacticMorphism sm = sm_of("(a|b)*ab(a|b)*");
    CHECK_THROWS_AS(check_eq_csides(sm, st_sets(sm), 3), ResourceLimitError);
  }
}

TEST_CASE("swap-quantified equation") {
  SECTION("trivial monoid passes") {
    SyntacticMorphism sm = sm_of("(a|b)*");
    CHECK(check_eq_swap(sm, content_swaps(content_images(sm))).pass);
  }

  SECTION("(aa)* fails: the set witness is also a swap via B = {a}") {
    SyntacticMorphism sm = sm_of("(aa)*");
    EquationVerdict v = check_eq_swap(sm, content_swaps(content_images(sm)));
    REQUIRE_FALSE(v.pass);
    // 1 lies in the exact image of {a} (via aa), so e = f = 1 is allowed
    CHECK(v.failure->elements ==
          std::vector<ElementId>{0, 0, 0, elem(sm, "a"), 0, 0});
  }

  SECTION("(ab)* passes") {
    SyntacticMorphism sm = sm_of("(ab)*");
    CHECK(check_eq_swap(sm, content_swaps(content_images(sm))).pass);
  }
}

TEST_CASE("pair equation quantified over closure-level pairs") {
  SECTION("trivial monoid passes") {
    SyntacticMorphism sm = sm_of("(a|b)*");
    CHECK(check_eq_capolcp(sm, polst_pairs(sm)).pass);
  }

  SECTION("contains-an-a passes") {
    SyntacticMorphism sm = sm_of("(a|b)*a(a|b)*");
    CHECK(check_eq_capolcp(sm, polst_pairs(sm)).pass);
  }

  SECTION("(aa)* fails at (t,s) = (1,g)") {
    SyntacticMorphism sm = sm_of("(aa)*");
    PairSet pol = polst_pairs(sm);
    // over a group the closure-level pairs are all pairs
    for (ElementId s = 0; s < 2; ++s) {
      for (ElementId t = 0; t < 2; ++t) CHECK(pol.accepted(s, t));
    }
    EquationVerdict v = check_eq_capolcp(sm, pol);
    REQUIRE_FALSE(v.pass);
    CHECK(v.failure->roles == std::vector<std::string>{"t", "s"});
    CHECK(v.failure->elements == std::vector<ElementId>{0, elem(sm, "a")});
  }
}

TEST_CASE("vacuous oracles make every check pass") {
  SyntacticMorphism sm = sm_of("(ab)*");

  SECTION("diagonal pairs only") {
    PairSet diag;
    diag.tag = PairSet::Tag::AT;
    diag.size = sm.monoid.size;
    diag.rows.assign(diag.size, Bits(diag.size));
    for (ElementId s = 0; s < diag.size; ++s) diag.rows[s].set(s);
    CHECK(check_eq_cacp(sm, diag).pass);
  }

  SECTION("no accepted sets or swaps") {
    SetFamilyOracle empty_sets;
    empty_sets.size = sm.monoid.size;
    CHECK(check_eq_csides(sm, empty_sets).pass);
    SwapOracle empty_swaps;
    empty_swaps.size = sm.monoid.size;
    CHECK(check_eq_swap(sm, empty_swaps).pass);
  }
}

TEST_CASE("checkers are deterministic") {
  SyntacticMorphism sm = sm_of("(aa|ab)*");
  ContentImages ci = content_images(sm);
  EquationVerdict v1 = check_eq_csides(sm, at_sets(ci));
  EquationVerdict v2 = check_eq_csides(sm, at_sets(ci));
  CHECK(v1.pass == v2.pass);
  if (!v1.pass) {
    CHECK(v1.failure->elements == v2.failure->elements);
    CHECK(v1.failure->lhs_value == v2.failure->lhs_value);
    CHECK(v1.failure->rhs_value == v2.failure->rhs_value);
  }
}

TEST_CASE("the set equation is load-bearing beyond the pair equation") {
  // a monoid whose recognized languages all sit in the intersection of the
  // second levels yet are not piecewise testable: the pair equation alone
  // passes and only the set equation rejects
  SyntacticMorphism sm = random_morphism({10011});
  CHECK(check_eq_cacp(sm, st_pairs(sm)).pass);
  CHECK_FALSE(check_eq_csides(sm, st_sets(sm)).pass);
  CHECK_FALSE(is_j_trivial(green_relations(sm.monoid)));
}

TEST_CASE("equation-route equivalences on fixtures") {
  for (const char* r :
       {"(ab)*", "(aa)*", "b*", "(a|b)*a(a|b)*", "(a|b)*a(a|b)*b(a|b)*"}) {
    SyntacticMorphism sm = sm_of(r, "ab");
    ContentImages ci = content_images(sm);
    INFO("fixture: " << r);
    CHECK(check_eq_cacp(sm, st_pairs(sm)).pass ==
          check_eq_capolcp(sm, polst_pairs(sm)).pass);
    CHECK(check_eq_swap(sm, content_swaps(ci)).pass ==
          check_eq_csides(sm, at_sets(ci)).pass);
  }
}

TEST_CASE("reported six-tuple witness is the least failing tuple") {
  // literal enumeration over (e, f, q, r, s, t) in lexicographic order on
  // small monoids, compared against the factored checker's witness
  int failing_cases = 0;
  for (uint64_t seed = 400; seed < 460 && failing_cases < 8; ++seed) {
    RandomMorphismSpec spec;
    spec.seed = seed;
    spec.max_states = 3;
    SyntacticMorphism sm = random_morphism(spec);
    const FiniteMonoid& m = sm.monoid;
    if (m.size > 8) continue;
    ContentImages ci = content_images(sm);
    SetFamilyOracle sets = at_sets(ci);
    EquationVerdict v = check_eq_csides(sm, sets);

    std::optional<std::vector<ElementId>> brute;
    Bits tuple_set(m.size);
    for (ElementId e = 0; e < m.size && !brute; ++e) {
      if (!m.idempotent[e]) continue;
      for (ElementId f = 0; f < m.size && !brute; ++f) {
        if (!m.idempotent[f]) continue;
        for (ElementId q = 0; q < m.size && !brute; ++q) {
          for (ElementId r = 0; r < m.size && !brute; ++r) {
            for (ElementId s = 0; s < m.size && !brute; ++s) {
              for (ElementId t = 0; t < m.size && !brute; ++t) {
                tuple_set.reset();
                for (ElementId x : {q, r, s, t, e, f}) tuple_set.set(x);
                if (!sets.accepts(tuple_set)) continue;
                ElementId x1 = m.omega[m.mul(e, q, f, r, e)];
                ElementId y1 = m.omega[m.mul(e, s, f, t, e)];
                if (m.mul(x1, y1) != m.mul(x1, m.mul(q, f, t), y1)) {
                  brute = std::vector<ElementId>{q, r, s, t, e, f};
                }
              }
            }
          }
        }
      }
    }

    CHECK(v.pass == !brute.has_value());
    if (brute) {
      ++failing_cases;
      CHECK(v.failure->elements == *brute);
    }
  }
  CHECK(failing_cases > 0);
}

TEST_CASE("swap-check witness is also the least failing tuple") {
  int failing_cases = 0;
  for (uint64_t seed = 460; seed < 520 && failing_cases < 8; ++seed) {
    RandomMorphismSpec spec;
    spec.seed = seed;
    spec.max_states = 3;
    SyntacticMorphism sm = random_morphism(spec);
    const FiniteMonoid& m = sm.monoid;
    if (m.size > 8) continue;
    SwapOracle swaps = content_swaps(content_images(sm));
    EquationVerdict v = check_eq_swap(sm, swaps);

    std::optional<std::vector<ElementId>> brute;
    for (ElementId e = 0; e < m.size && !brute; ++e) {
      if (!m.idempotent[e]) continue;
      for (ElementId f = 0; f < m.size && !brute; ++f) {
        if (!m.idempotent[f]) continue;
        for (ElementId q = 0; q < m.size && !brute; ++q) {
          for (ElementId r = 0; r < m.size && !brute; ++r) {
            for (ElementId s = 0; s < m.size && !brute; ++s) {
              for (ElementId t = 0; t < m.size && !brute; ++t) {
                if (!swaps.accepts(q, r, s, t, e, f)) continue;
                ElementId x1 = m.omega[m.mul(e, q, f, r, e)];
                ElementId y1 = m.omega[m.mul(e, s, f, t, e)];
                if (m.mul(x1, y1) != m.mul(x1, m.mul(q, f, t), y1)) {
                  brute = std::vector<ElementId>{q, r, s, t, e, f};
                }
              }
            }
          }
        }
      }
    }

    CHECK(v.pass == !brute.has_value());
    if (brute) {
      ++failing_cases;
      CHECK(v.failure->elements == *brute);
    }
  }
  CHECK(failing_cases > 0);
}

TEST_CASE("reported witnesses genuinely violate their equation") {
  for (uint64_t seed = 300; seed < 320; ++seed) {
    SyntacticMorphism sm = random_morphism({seed});
    const FiniteMonoid& m = sm.monoid;
    EquationVerdict v = check_eq_csides(sm, st_sets(sm));
    if (v.pass) continue;
    const EquationFailure& f = *v.failure;
    ElementId q = f.elements[0], r = f.elements[1], s = f.elements[2],
              t = f.elements[3], e = f.elements[4], ff = f.elements[5];
    ElementId x = m.omega[m.mul(e, q, ff, r, e)];
    ElementId y = m.omega[m.mul(e, s, ff, t, e)];
    CHECK(m.mul(x, y) == f.lhs_value);
    CHECK(m.mul(x, m.mul(q, ff, t), y) == f.rhs_value);
    CHECK(f.lhs_value != f.rhs_value);
    // witness words map back to the reported elements
    for (std::size_t i = 0; i < f.elements.size(); ++i) {
      CHECK(sm.image_of_word(f.words[i]) == f.elements[i]);
    }
  }
}
