#ifndef MONODEC_REPORT_IO_HPP_
#define MONODEC_REPORT_IO_HPP_

#include <ostream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "monodec/deciders.hpp"

namespace monodec {

namespace detail {

// The empty word is printed with the same notation the expression syntax
// uses for it.
inline std::string show_word(const std::string& w) {
  return w.empty() ? "~" : w;
}

inline std::string show_bool(bool b) { return b ? "yes" : "no"; }

}  // namespace detail

// Machine-readable report. Field names and nesting are part of the tool's
// contract. Timing values are only filled in when they were collected;
// otherwise "timings_ms" is an empty object so that repeated runs stay
// byte-identical.
inline std::string report_to_json(const Report& report) {
  nlohmann::ordered_json j;
  j["input"] = report.input;
  j["alphabet"] = nlohmann::ordered_json::array();
  for (char c : report.alphabet.letters()) {
    j["alphabet"].push_back(std::string(1, c));
  }
  j["dfa_states"] = report.dfa_states;
  j["monoid_size"] = report.monoid_size;
  j["green"] = {{"j_classes", report.green.j_classes},
                {"j_trivial", report.green.j_trivial},
                {"aperiodic", report.green.aperiodic}};
  nlohmann::ordered_json verdicts = nlohmann::ordered_json::object();
  auto put = [&verdicts](const char* name, const std::optional<bool>& v) {
    if (v) verdicts[name] = *v;
  };
  put("star_free", report.star_free);
  put("pol_st", report.pol_st);
  put("bpol_st", report.bpol_st);
  put("pol_at", report.pol_at);
  put("bpol_at", report.bpol_at);
  j["verdicts"] = std::move(verdicts);
  j["witnesses"] = nlohmann::ordered_json::array();
  for (const VerdictWitness& w : report.witnesses) {
    nlohmann::ordered_json entry;
    entry["verdict"] = w.verdict;
    entry["equation"] = w.failure.equation;
    entry["elements"] = w.failure.words;
    entry["words"] = w.failure.words;
    j["witnesses"].push_back(std::move(entry));
  }
  nlohmann::ordered_json timings = nlohmann::ordered_json::object();
  for (const auto& [stage, ms] : report.timings_ms) timings[stage] = ms;
  j["timings_ms"] = std::move(timings);
  return j.dump(2) + "\n";
}

inline void write_text_report(std::ostream& out, const Report& report) {
  out << "input:        " << report.input << "\n";
  out << "alphabet:     " << report.alphabet.to_string() << "\n";
  out << "dfa states:   " << report.dfa_states << "\n";
  out << "monoid size:  " << report.monoid_size << "\n";
  out << "elements:    ";
  for (std::size_t s = 0; s < report.element_witness.size(); ++s) {
    out << ' ' << detail::show_word(report.element_witness[s]);
    if (report.accepting_elements.test(s)) out << '!';
  }
  out << "  ('!' marks accepting elements)\n";
  out << "green:        " << report.green.j_classes << " J-classes, "
      << report.green.l_classes << " L-classes, " << report.green.r_classes
      << " R-classes, " << report.green.h_classes << " H-classes"
      << "; J-trivial: " << detail::show_bool(report.green.j_trivial)
      << "; aperiodic: " << detail::show_bool(report.green.aperiodic) << "\n";
  out << "verdicts:\n";
  auto line = [&out](const char* name, const std::optional<bool>& v) {
    if (v) out << "  " << name << ": " << detail::show_bool(*v) << "\n";
  };
  line("star_free (aperiodic)", report.star_free);
  line("pol_st    (level 1/2, Straubing-Therien)", report.pol_st);
  line("bpol_st   (level 1, piecewise testable)", report.bpol_st);
  line("pol_at    (level 3/2)", report.pol_at);
  line("bpol_at   (level 2)", report.bpol_at);
  if (!report.witnesses.empty()) {
    out << "failure witnesses:\n";
    for (const VerdictWitness& w : report.witnesses) {
      out << "  " << w.verdict << " [" << w.failure.equation << "] at ";
      for (std::size_t i = 0; i < w.failure.elements.size(); ++i) {
        if (i) out << ", ";
        out << w.failure.roles[i] << "="
            << detail::show_word(w.failure.words[i]);
      }
      out << "\n";
    }
  }
  if (!report.timings_ms.empty()) {
    out << "timings (ms):\n";
    for (const auto& [stage, ms] : report.timings_ms) {
      out << "  " << stage << ": " << ms << "\n";
    }
  }
}

}  // namespace monodec

#endif  // MONODEC_REPORT_IO_HPP_
