#ifndef MONODEC_CLI_HPP_
#define MONODEC_CLI_HPP_

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "monodec/deciders.hpp"
#include "monodec/report_io.hpp"
#include "monodec/selftest.hpp"

namespace monodec {

// Exit codes of the command-line tool.
//   0  success
//   1  usage error
//   2  input error (syntax, alphabet, malformed document)
//   3  resource cap exceeded
//   4  self-test property failure
//   5  internal consistency error
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"Decides membership of a regular language in the lower levels "
               "of the quantifier-alternation hierarchy of first-order logic "
               "on words, via equations on its syntactic monoid"};
  app.require_subcommand(1);

  std::string input;
  std::string format = "regex";
  std::string alphabet_letters;
  std::string level = "all";
  bool json = false;
  bool timings = false;
  uint32_t max_monoid = kDefaultMonoidCap;
  uint64_t max_tuples = kDefaultTupleBudget;

  CLI::App* analyze_cmd = app.add_subcommand(
      "analyze", "Analyze one language and print its report");
  analyze_cmd->add_option("--input", input,
                          "Expression, or path to an automaton document when "
                          "--format dfa")
      ->required();
  analyze_cmd->add_option("--format", format, "Input format")
      ->check(CLI::IsMember({"regex", "dfa"}));
  analyze_cmd->add_option("--alphabet", alphabet_letters,
                          "Declared alphabet (defaults to the letters "
                          "occurring in the input)");
  analyze_cmd->add_option("--level", level, "Verdict selection")
      ->check(CLI::IsMember({"all", "polst", "bpolst", "polat", "bpolat",
                             "sf"}));
  analyze_cmd->add_flag("--json", json, "Emit the JSON report");
  analyze_cmd->add_flag("--timings", timings,
                        "Collect per-stage wall-clock timings (makes output "
                        "non-reproducible)");
  analyze_cmd->add_option("--max-monoid", max_monoid,
                          "Cap on syntactic monoid size")
      ->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--max-tuples", max_tuples,
                          "Work budget for the six-tuple equation checks")
      ->check(CLI::PositiveNumber);

  uint64_t seed = 1;
  uint64_t count = 100;
  CLI::App* selftest_cmd = app.add_subcommand(
      "selftest", "Run the randomized property battery");
  selftest_cmd->add_option("--seed", seed, "Base seed");
  selftest_cmd->add_option("--count", count, "Number of random instances")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> cli_args(args.rbegin(), args.rend());
  try {
    app.parse(cli_args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (selftest_cmd->parsed()) {
      return run_selftest(seed, count, out);
    }

    std::optional<Alphabet> declared;
    if (!alphabet_letters.empty()) declared = Alphabet(alphabet_letters);

    Dfa dfa;
    if (format == "regex") {
      dfa = compile(parse_regex(input, declared));
    } else {
      std::ifstream file(input);
      if (!file) {
        err << "input error: cannot open file '" << input << "'\n";
        return 2;
      }
      std::stringstream buffer;
      buffer << file.rdbuf();
      dfa = parse_dfa(buffer.str());
      if (declared && *declared != dfa.alphabet) {
        throw AlphabetError("declared alphabet '" + declared->to_string() +
                            "' differs from the document alphabet '" +
                            dfa.alphabet.to_string() + "'");
      }
    }

    AnalyzeOptions options;
    options.monoid_cap = max_monoid;
    options.tuple_budget = max_tuples;
    options.collect_timings = timings;
    options.input_description = input;
    options.level = level == "all"      ? Level::All
                    : level == "polst"  ? Level::PolSt
                    : level == "bpolst" ? Level::BPolSt
                    : level == "polat"  ? Level::PolAt
                    : level == "bpolat" ? Level::BPolAt
                                        : Level::StarFree;

    Report report = analyze(dfa, options);
    if (json) {
      out << report_to_json(report);
    } else {
      write_text_report(out, report);
    }
    return 0;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const AlphabetError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceLimitError& e) {
    err << "resource error: " << e.what() << "\n";
    return 3;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 5;
  }
}

inline int run_cli(int argc, char** argv, std::ostream& out,
                   std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, out, err);
}

}  // namespace monodec

#endif  // MONODEC_CLI_HPP_
