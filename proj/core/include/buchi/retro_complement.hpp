#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "buchi/dense.hpp"
#include "buchi/level_ranking.hpp"
#include "buchi/nbw.hpp"
#include "buchi/partition.hpp"

namespace buchi {

/// State of the two-stage complements. Stage one carries a preordered subset
/// (or a plain subset for the symbolic variant); stage two a level ranking,
/// an obligation set and, for the cut-point variant, the even rank under check.
struct retro_state {
  bool ranked = false;
  ordered_partition partition;
  state_set subset;
  level_ranking f;
  state_set obligations;
  int index = 0;
  bool operator==(const retro_state&) const = default;
};

struct retro_state_hash {
  std::size_t operator()(const retro_state& s) const {
    std::size_t seed = s.ranked ? 1 : 0;
    hash_combine(seed, std::hash<ordered_partition>{}(s.partition));
    hash_combine(seed, std::hash<state_set>{}(s.subset));
    hash_combine(seed, std::hash<level_ranking>{}(s.f));
    hash_combine(seed, std::hash<state_set>{}(s.obligations));
    hash_combine(seed, static_cast<std::size_t>(s.index));
    return seed;
  }
};

/// Deterministic-in-the-limit complement: tracks preordered subsets, guesses
/// once when to switch to tight level rankings, then proceeds deterministically.
class retro_complement {
 public:
  using state = retro_state;
  using state_hash = retro_state_hash;

  explicit retro_complement(const nbw& a);

  const std::vector<std::string>& alphabet() const { return a_.alphabet(); }
  void initial_states(std::vector<state>& out) const;
  void successors(const state& s, symbol_id symbol, std::vector<state>& out) const;
  bool is_accepting(const state& s) const;
  std::string name(const state& s) const;

 private:
  dense_automaton a_;
};

/// As retro_complement, with a cut-point that checks one even rank at a time.
class schewe_complement {
 public:
  using state = retro_state;
  using state_hash = retro_state_hash;

  explicit schewe_complement(const nbw& a);

  const std::vector<std::string>& alphabet() const { return a_.alphabet(); }
  void initial_states(std::vector<state>& out) const;
  void successors(const state& s, symbol_id symbol, std::vector<state>& out) const;
  bool is_accepting(const state& s) const {
    return s.ranked && s.obligations.empty() && s.index == 0;
  }
  std::string name(const state& s) const;

 private:
  dense_automaton a_;
};

/// Stage one tracks plain subsets; the switch may go to any level ranking
/// bounded by 2|Q \ F| whose support is the successor subset.
class symbolic_complement {
 public:
  using state = retro_state;
  using state_hash = retro_state_hash;

  explicit symbolic_complement(const nbw& a);

  const std::vector<std::string>& alphabet() const { return a_.alphabet(); }
  void initial_states(std::vector<state>& out) const;
  void successors(const state& s, symbol_id symbol, std::vector<state>& out) const;
  bool is_accepting(const state& s) const { return s.ranked && s.obligations.empty(); }
  std::string name(const state& s) const;

 private:
  dense_automaton a_;
};

/// Second-stage transition shared by the retrospective and symbolic complements.
retro_state ranked_successor(const dense_automaton& a, const retro_state& s, symbol_id symbol);

nbw build_retro_complement(const nbw& a);
nbw build_schewe_complement(const nbw& a);
/// Throws budget_exceeded when more than `budget` states are reachable.
nbw build_symbolic_complement(const nbw& a, std::size_t budget = 1'000'000);

}  // namespace buchi
