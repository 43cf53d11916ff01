#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "buchi/complement.hpp"
#include "buchi/nbw.hpp"

namespace buchi {

struct random_params {
  std::size_t states = 3;
  std::size_t alphabet_size = 2;
  /// Transitions per letter: ceil(states * transition_density), capped at states^2.
  double transition_density = 1.5;
  /// Accepting states: ceil(states * acceptance_density), capped at states.
  double acceptance_density = 0.5;
  /// Initial states besides state 0.
  std::size_t extra_initial = 0;
  std::uint64_t seed = 0;
};

/// Random automaton in the style of Tabakov and Vardi. The parameters are
/// recorded in the metadata; equal parameters give equal automata.
nbw random_nbw(const random_params& params);

/// All lassos u v^omega with |u| <= max_stem and 1 <= |v| <= max_cycle,
/// skipping cycles that are powers of a shorter word. Ordered by stem length,
/// stem, cycle length, cycle.
std::vector<lasso_word> enumerate_lassos(std::size_t alphabet_size, std::size_t max_stem,
                                         std::size_t max_cycle);

struct sweep_config {
  std::size_t max_stem = 3;
  std::size_t max_cycle = 4;
  std::size_t samples = 50;
  std::uint64_t seed = 1;
  std::size_t budget = 1'000'000;
  std::optional<int> bound;
};

struct counterexample {
  lasso_word word;
  bool in_automaton = false;
  bool in_complement = false;
};

struct method_report {
  method which = method::rank;
  bool passed = false;
  std::optional<counterexample> failure;
  std::size_t lassos_checked = 0;
  std::size_t states = 0;
  std::size_t transitions = 0;
  bool disjoint = false;
  /// Structural audits; absent when not applicable to the method.
  std::optional<bool> deterministic_in_limit;
  std::optional<std::size_t> max_branching;
  std::optional<std::size_t> max_stage2_branching;
  bool structure_ok = true;
  std::optional<std::string> error;
  double seconds = 0;
};

/// Builds the complement and checks it against the membership oracle on every
/// enumerated lasso, checks disjointness exactly, and audits structure.
method_report check_complement(const nbw& a, method m, const sweep_config& config);

struct disagreement {
  lasso_word word;
  method first = method::rank;
  bool first_verdict = false;
  method second = method::rank;
  bool second_verdict = false;
};

struct cross_check_report {
  bool agree = true;
  std::size_t lassos_checked = 0;
  std::optional<disagreement> failure;
};

/// All methods give the same verdict on every enumerated lasso.
cross_check_report cross_check_methods(const nbw& a, const sweep_config& config);

/// Ordered set partitions of a k-element set.
std::uint64_t fubini(std::size_t k);
/// Preordered subsets of an n-element set: sum over k of C(n,k) * fubini(k).
std::uint64_t preordered_subset_count(std::size_t n);

struct size_report {
  std::size_t automaton_states = 0;
  std::uint64_t preordered_subsets = 0;
  /// Reachable first-stage states of the retrospective complement.
  std::size_t retro_stage1_states = 0;
  std::vector<std::pair<method, std::pair<std::size_t, std::size_t>>> counts;
  std::vector<std::pair<method, std::string>> errors;
};

size_report size_stats(const nbw& a, const sweep_config& config = {});

struct verification_report {
  std::string automaton;
  sweep_config config;
  std::vector<method_report> methods;
  std::optional<cross_check_report> cross_check;
  bool passed() const;
};

/// Runs check_complement for each method and the cross-check.
verification_report verify_automaton(const nbw& a, const std::string& label,
                                     const std::vector<method>& methods,
                                     const sweep_config& config);

/// Human-readable report. Timing is printed only when requested so that
/// reports stay byte-identical across runs.
std::string to_text(const verification_report& r, const nbw& a, bool timing = false);
/// Versioned key=value lines, first line "buchi-report 1".
std::string to_key_value(const verification_report& r, const nbw& a, bool timing = false);

}  // namespace buchi
