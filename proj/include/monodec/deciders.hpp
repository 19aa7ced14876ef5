#ifndef MONODEC_DECIDERS_HPP_
#define MONODEC_DECIDERS_HPP_

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monodec/equations.hpp"
#include "monodec/green.hpp"
#include "monodec/relations.hpp"
#include "monodec/syntactic.hpp"

namespace monodec {

// Which verdicts to compute.
enum class Level { All, StarFree, PolSt, BPolSt, PolAt, BPolAt };

struct AnalyzeOptions {
  Level level = Level::All;
  uint32_t monoid_cap = kDefaultMonoidCap;
  uint64_t tuple_budget = kDefaultTupleBudget;
  bool collect_timings = false;
  std::string input_description;
};

struct GreenSummary {
  uint32_t j_classes = 0;
  uint32_t l_classes = 0;
  uint32_t r_classes = 0;
  uint32_t h_classes = 0;
  bool j_trivial = false;
  bool aperiodic = false;
};

struct VerdictWitness {
  std::string verdict;  // which verdict the failure belongs to
  EquationFailure failure;
};

// Consolidated per-language result. Verdicts are present when selected.
struct Report {
  std::string input;
  Alphabet alphabet;
  uint32_t dfa_states = 0;
  uint32_t monoid_size = 0;
  GreenSummary green;
  std::optional<bool> star_free, pol_st, bpol_st, pol_at, bpol_at;
  std::vector<VerdictWitness> witnesses;
  std::vector<std::pair<std::string, double>> timings_ms;
  std::vector<std::string> element_witness;  // word per monoid element
  Bits accepting_elements;
};

inline bool decide_star_free(const SyntacticMorphism& sm) {
  return is_aperiodic(sm.monoid);
}

inline bool decide_pol_st(const SyntacticMorphism& sm) {
  OrderRelation ord = syntactic_order(sm);
  return check_pol_equation(sm, ord, st_pairs(sm)).pass;
}

inline bool decide_pol_at(const SyntacticMorphism& sm) {
  OrderRelation ord = syntactic_order(sm);
  return check_pol_equation(sm, ord, at_pairs(content_images(sm))).pass;
}

// Two independent routes: the generic equations instantiated at the trivial
// class, and J-triviality. A disagreement is an implementation bug and is
// reported as such, never resolved silently.
inline bool decide_bpol_st(const SyntacticMorphism& sm,
                           uint64_t tuple_budget = kDefaultTupleBudget) {
  PairSet pairs = st_pairs(sm);
  SetFamilyOracle sets = st_sets(sm);
  bool via_equations = check_eq_cacp(sm, pairs).pass &&
                       check_eq_csides(sm, sets, tuple_budget).pass;
  bool via_green = is_j_trivial(green_relations(sm.monoid));
  if (via_equations != via_green) {
    throw InternalError(
        "piecewise-testability routes disagree: equations say " +
        std::string(via_equations ? "yes" : "no") + ", J-triviality says " +
        std::string(via_green ? "yes" : "no"));
  }
  return via_equations;
}

inline bool decide_bpol_at(const SyntacticMorphism& sm,
                           uint64_t tuple_budget = kDefaultTupleBudget) {
  ContentImages ci = content_images(sm);
  return check_eq_cacp(sm, at_pairs(ci)).pass &&
         check_eq_csides(sm, at_sets(ci), tuple_budget).pass;
}

namespace detail {

class StageTimer {
 public:
  explicit StageTimer(Report& report, bool enabled)
      : report_(report), enabled_(enabled) {}

  template <typename F>
  auto time(const std::string& stage, F&& f) {
    if (!enabled_) return f();
    auto start = std::chrono::steady_clock::now();
    auto result = f();
    auto stop = std::chrono::steady_clock::now();
    report_.timings_ms.emplace_back(
        stage,
        std::chrono::duration<double, std::milli>(stop - start).count());
    return result;
  }

 private:
  Report& report_;
  bool enabled_;
};

inline void record_failure(Report& report, const std::string& verdict,
                           const EquationVerdict& v) {
  if (!v.pass && v.failure) {
    report.witnesses.push_back(VerdictWitness{verdict, *v.failure});
  }
}

}  // namespace detail

// Runs the selected deciders on a minimal canonical DFA, asserting the
// containment chain pol_st => bpol_st => pol_at => bpol_at => star_free on
// full runs.
inline Report analyze(const Dfa& dfa, const AnalyzeOptions& options = {}) {
  Report report;
  report.input = options.input_description;
  report.alphabet = dfa.alphabet;
  report.dfa_states = dfa.num_states;
  detail::StageTimer timer(report, options.collect_timings);

  SyntacticMorphism sm = timer.time(
      "monoid", [&] { return transition_monoid(dfa, options.monoid_cap); });
  report.monoid_size = sm.monoid.size;
  report.element_witness = sm.witness;
  report.accepting_elements = sm.accepting;

  GreenData green = timer.time(
      "green", [&] { return green_relations(sm.monoid); });
  report.green.j_classes = green.num_j_classes;
  report.green.l_classes = green.num_l_classes;
  report.green.r_classes = green.num_r_classes;
  report.green.h_classes = green.num_h_classes;
  report.green.j_trivial = is_j_trivial(green);
  report.green.aperiodic = is_aperiodic(sm.monoid);

  const Level level = options.level;
  auto wants = [level](Level l) { return level == Level::All || level == l; };

  if (wants(Level::StarFree)) {
    report.star_free = report.green.aperiodic;
    if (!*report.star_free) {
      for (ElementId s = 0; s < sm.monoid.size; ++s) {
        if (sm.monoid.omega_plus_one(s) != sm.monoid.omega[s]) {
          EquationFailure f;
          f.equation = "aperiodicity";
          f.roles = {"s"};
          f.elements = {s};
          f.lhs_value = sm.monoid.omega[s];
          f.rhs_value = sm.monoid.omega_plus_one(s);
          f.words = {sm.witness[s]};
          report.witnesses.push_back(VerdictWitness{"star_free", std::move(f)});
          break;
        }
      }
    }
  }

  std::optional<OrderRelation> ord;
  auto order = [&]() -> const OrderRelation& {
    if (!ord) {
      ord = timer.time("order", [&] { return syntactic_order(sm); });
    }
    return *ord;
  };
  std::optional<ContentImages> ci;
  auto images = [&]() -> const ContentImages& {
    if (!ci) {
      ci = timer.time("content", [&] { return content_images(sm); });
    }
    return *ci;
  };

  if (wants(Level::PolSt)) {
    EquationVerdict v = timer.time("pol_st", [&] {
      return check_pol_equation(sm, order(), st_pairs(sm));
    });
    report.pol_st = v.pass;
    detail::record_failure(report, "pol_st", v);
  }

  if (wants(Level::BPolSt)) {
    bool pass = timer.time("bpol_st", [&] {
      PairSet pairs = st_pairs(sm);
      EquationVerdict v1 = check_eq_cacp(sm, pairs);
      EquationVerdict v2 =
          v1.pass ? check_eq_csides(sm, st_sets(sm), options.tuple_budget)
                  : EquationVerdict{};
      detail::record_failure(report, "bpol_st", v1);
      if (v1.pass) detail::record_failure(report, "bpol_st", v2);
      bool via_equations = v1.pass && v2.pass;
      bool via_green = is_j_trivial(green);
      if (via_equations != via_green) {
        throw InternalError(
            "piecewise-testability routes disagree: equations say " +
            std::string(via_equations ? "yes" : "no") +
            ", J-triviality says " + std::string(via_green ? "yes" : "no"));
      }
      return via_equations;
    });
    report.bpol_st = pass;
  }

  if (wants(Level::PolAt)) {
    EquationVerdict v = timer.time("pol_at", [&] {
      return check_pol_equation(sm, order(), at_pairs(images()));
    });
    report.pol_at = v.pass;
    detail::record_failure(report, "pol_at", v);
  }

  if (wants(Level::BPolAt)) {
    bool pass = timer.time("bpol_at", [&] {
      EquationVerdict v1 = check_eq_cacp(sm, at_pairs(images()));
      EquationVerdict v2 =
          v1.pass
              ? check_eq_csides(sm, at_sets(images()), options.tuple_budget)
              : EquationVerdict{};
      detail::record_failure(report, "bpol_at", v1);
      if (v1.pass) detail::record_failure(report, "bpol_at", v2);
      return v1.pass && v2.pass;
    });
    report.bpol_at = pass;
  }

  if (level == Level::All) {
    auto implies = [](bool a, bool b) { return !a || b; };
    bool chain = implies(*report.pol_st, *report.bpol_st) &&
                 implies(*report.bpol_st, *report.pol_at) &&
                 implies(*report.pol_at, *report.bpol_at) &&
                 implies(*report.bpol_at, *report.star_free);
    if (!chain) {
      throw InternalError(
          "verdict monotonicity chain violated on input '" + report.input +
          "'");
    }
  }
  return report;
}

}  // namespace monodec

#endif  // MONODEC_DECIDERS_HPP_
