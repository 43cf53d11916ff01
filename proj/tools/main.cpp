#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "buchi/complement.hpp"
#include "buchi/dot.hpp"
#include "buchi/format.hpp"
#include "buchi/run_dag.hpp"
#include "buchi/search.hpp"
#include "buchi/smv.hpp"
#include "buchi/verify.hpp"

namespace {

using namespace buchi;

constexpr int exit_yes = 0;
constexpr int exit_no = 1;
constexpr int exit_usage = 2;

void write_output(const std::string& text, const std::string& path) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot write " + path);
  out << text;
}

const char* flag(bool b) { return b ? "true" : "false"; }

struct word_args {
  std::string stem;
  std::string cycle;

  void add(CLI::App* cmd) {
    cmd->add_option("--stem", stem, "Finite prefix u (may be empty)");
    cmd->add_option("--cycle", cycle, "Repeated part v")->required();
  }
  lasso_word build(const nbw& a) const {
    return lasso_word(parse_word(a, stem), parse_word(a, cycle));
  }
};

struct sweep_args {
  std::size_t max_stem = 3;
  std::size_t max_cycle = 4;
  std::size_t budget = 1'000'000;
  std::optional<int> bound;

  void add(CLI::App* cmd) {
    cmd->add_option("--max-stem", max_stem, "Longest lasso stem")->capture_default_str();
    cmd->add_option("--max-cycle", max_cycle, "Longest lasso cycle")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--budget", budget, "State cap for explicit constructions")
        ->capture_default_str();
    cmd->add_option("--bound", bound, "Rank bound for the rank method");
  }
  sweep_config build() const {
    sweep_config c;
    c.max_stem = max_stem;
    c.max_cycle = max_cycle;
    c.budget = budget;
    c.bound = bound;
    return c;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Büchi automata complementation and run-DAG analysis"};
  app.require_subcommand(1);
  app.fallthrough();
  bool porcelain = false;
  app.add_flag("--porcelain", porcelain, "Machine-readable key=value output");

  // complement
  auto* complement_cmd = app.add_subcommand("complement", "Build a complement automaton");
  std::string method_text = "retro";
  std::optional<int> bound;
  std::size_t budget = 1'000'000;
  std::string in_path, out_path;
  complement_cmd->add_option("--method", method_text, "rank, tight, slice, retro, schewe or symbolic")
      ->capture_default_str();
  complement_cmd->add_option("--bound", bound, "Rank bound for the rank method");
  complement_cmd->add_option("--budget", budget, "State cap")->capture_default_str();
  complement_cmd->add_option("IN", in_path, "Input automaton")->required();
  complement_cmd->add_option("OUT", out_path, "Output automaton, - for stdout")->required();

  // member
  auto* member_cmd = app.add_subcommand("member", "Decide whether a lasso word is accepted");
  std::string automaton_path;
  word_args member_word;
  member_cmd->add_option("AUTOMATON", automaton_path)->required();
  member_word.add(member_cmd);

  // empty
  auto* empty_cmd = app.add_subcommand("empty", "Decide whether the language is empty");
  empty_cmd->add_option("AUTOMATON", automaton_path)->required();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Check complement constructions against the oracle");
  sweep_args verify_sweep;
  std::vector<std::string> verify_methods;
  bool timing = false;
  verify_cmd->add_option("AUTOMATON", automaton_path)->required();
  verify_cmd->add_option("--methods", verify_methods, "Methods to check (default: all)")
      ->delimiter(',');
  verify_cmd->add_flag("--timing", timing, "Include timings in the report");
  verify_sweep.add(verify_cmd);

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random automaton");
  random_params params;
  std::string gen_out = "-";
  gen_cmd->add_option("--states", params.states, "Number of states")->required();
  gen_cmd->add_option("--seed", params.seed, "Random seed")->required();
  gen_cmd->add_option("--alphabet", params.alphabet_size, "Alphabet size")->capture_default_str();
  gen_cmd->add_option("--density", params.transition_density, "Transitions per letter per state")
      ->capture_default_str();
  gen_cmd->add_option("--fdensity", params.acceptance_density, "Fraction of accepting states")
      ->capture_default_str();
  gen_cmd->add_option("--extra-initial", params.extra_initial, "Initial states besides the first")
      ->capture_default_str();
  gen_cmd->add_option("-o,--output", gen_out, "Output file, - for stdout")->capture_default_str();

  // stats
  auto* stats_cmd = app.add_subcommand("stats", "Complement sizes and preordered-subset counts");
  sweep_args stats_sweep;
  stats_cmd->add_option("AUTOMATON", automaton_path)->required();
  stats_sweep.add(stats_cmd);

  // dag
  auto* dag_cmd = app.add_subcommand("dag", "Export the run DAG on a lasso word as DOT");
  word_args dag_word;
  std::size_t depth = 5;
  std::string annotate = "none";
  std::string dot_path = "-";
  dag_cmd->add_option("AUTOMATON", automaton_path)->required();
  dag_word.add(dag_cmd);
  dag_cmd->add_option("--depth", depth, "Levels to draw")->check(CLI::PositiveNumber)->capture_default_str();
  dag_cmd->add_option("--annotate", annotate, "profiles, prospective, retro:K or lambda:K")
      ->capture_default_str();
  dag_cmd->add_option("--dot", dot_path, "Output file, - for stdout")->capture_default_str();

  // smv
  auto* smv_cmd = app.add_subcommand("smv", "Export the symbolic complement as SMV");
  std::string smv_out;
  smv_cmd->add_option("AUTOMATON", automaton_path)->required();
  smv_cmd->add_option("OUT", smv_out, "Output file, - for stdout")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? exit_yes : exit_usage;
  }

  try {
    if (complement_cmd->parsed()) {
      nbw a = read_nbw_file(in_path);
      nbw c = complement(a, parse_method(method_text), {bound, budget});
      write_output(print_nbw(c), out_path);
      std::cerr << "states=" << c.num_states() << " transitions=" << c.num_transitions() << '\n';
      return exit_yes;
    }
    if (member_cmd->parsed()) {
      nbw a = read_nbw_file(automaton_path);
      bool accepted = member(a, member_word.build(a));
      if (porcelain)
        std::cout << "member=" << flag(accepted) << '\n';
      else
        std::cout << (accepted ? "accepted" : "rejected") << '\n';
      return accepted ? exit_yes : exit_no;
    }
    if (empty_cmd->parsed()) {
      nbw a = read_nbw_file(automaton_path);
      bool empty = is_empty(a);
      if (porcelain)
        std::cout << "empty=" << flag(empty) << '\n';
      else
        std::cout << (empty ? "empty" : "nonempty") << '\n';
      return empty ? exit_yes : exit_no;
    }
    if (verify_cmd->parsed()) {
      nbw a = read_nbw_file(automaton_path);
      std::vector<method> methods;
      for (const auto& name : verify_methods) methods.push_back(parse_method(name));
      if (methods.empty()) methods.assign(all_methods.begin(), all_methods.end());
      auto report = verify_automaton(a, automaton_path, methods, verify_sweep.build());
      std::cout << (porcelain ? to_key_value(report, a, timing) : to_text(report, a, timing));
      return report.passed() ? exit_yes : exit_no;
    }
    if (gen_cmd->parsed()) {
      write_output(print_nbw(random_nbw(params)), gen_out);
      return exit_yes;
    }
    if (stats_cmd->parsed()) {
      nbw a = read_nbw_file(automaton_path);
      auto s = size_stats(a, stats_sweep.build());
      bool within = s.retro_stage1_states <= s.preordered_subsets;
      if (porcelain) {
        std::cout << "states=" << s.automaton_states << '\n';
        std::cout << "preordered_subsets=" << s.preordered_subsets << '\n';
        std::cout << "retro_stage1_states=" << s.retro_stage1_states << '\n';
        std::cout << "within_bound=" << flag(within) << '\n';
        for (const auto& [m, c] : s.counts) {
          std::cout << "method." << method_name(m) << ".states=" << c.first << '\n';
          std::cout << "method." << method_name(m) << ".transitions=" << c.second << '\n';
        }
        for (const auto& [m, e] : s.errors) std::cout << "method." << method_name(m) << ".error=" << e << '\n';
      } else {
        std::cout << "automaton states: " << s.automaton_states << '\n';
        std::cout << "preordered subsets: " << s.preordered_subsets << '\n';
        std::cout << "retro stage-1 states: " << s.retro_stage1_states
                  << (within ? " (within bound)" : " (EXCEEDS bound)") << '\n';
        for (const auto& [m, c] : s.counts)
          std::cout << method_name(m) << ": states=" << c.first << " transitions=" << c.second << '\n';
        for (const auto& [m, e] : s.errors) std::cout << method_name(m) << ": " << e << '\n';
      }
      return within ? exit_yes : exit_no;
    }
    if (dag_cmd->parsed()) {
      nbw a = read_nbw_file(automaton_path);
      write_output(dag_to_dot(a, dag_word.build(a), depth, parse_annotation(annotate)), dot_path);
      return exit_yes;
    }
    if (smv_cmd->parsed()) {
      write_output(to_smv(read_nbw_file(automaton_path)), smv_out);
      return exit_yes;
    }
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const not_rejecting& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_no;
  } catch (const budget_exceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_no;
  }
  return exit_usage;
}
