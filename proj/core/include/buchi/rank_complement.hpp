#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "buchi/dense.hpp"
#include "buchi/level_ranking.hpp"
#include "buchi/nbw.hpp"

namespace buchi {

/// A level ranking paired with the states still obliged to reach an odd rank.
struct rank_state {
  level_ranking f;
  state_set obligations;
  bool operator==(const rank_state&) const = default;
};

struct rank_state_hash {
  std::size_t operator()(const rank_state& s) const {
    std::size_t seed = std::hash<level_ranking>{}(s.f);
    hash_combine(seed, std::hash<state_set>{}(s.obligations));
    return seed;
  }
};

/// Rank-based complement with ranks bounded by `bound`, explored lazily.
///
/// Successor rankings are restricted to support exactly the successors of the
/// current support; rankings that keep extra states ranked accept no
/// additional words.
class rank_complement {
 public:
  using state = rank_state;
  using state_hash = rank_state_hash;

  /// Default bound is 2|Q \ F|.
  explicit rank_complement(const nbw& a, std::optional<int> bound = std::nullopt);

  const std::vector<std::string>& alphabet() const { return a_.alphabet(); }
  int bound() const { return bound_; }
  void initial_states(std::vector<state>& out) const;
  void successors(const state& s, symbol_id symbol, std::vector<state>& out) const;
  bool is_accepting(const state& s) const { return s.obligations.empty(); }
  std::string name(const state& s) const;

 private:
  dense_automaton a_;
  int bound_;
};

/// Two-phase complement: a subset phase that may jump to a tight ranking,
/// then the rank-based transition restricted to tight rankings.
class tight_rank_complement {
 public:
  struct state {
    bool ranked = false;
    state_set subset;
    level_ranking f;
    state_set obligations;
    bool operator==(const state&) const = default;
  };
  struct state_hash {
    std::size_t operator()(const state& s) const {
      std::size_t seed = s.ranked ? 1 : 0;
      hash_combine(seed, std::hash<state_set>{}(s.subset));
      hash_combine(seed, std::hash<level_ranking>{}(s.f));
      hash_combine(seed, std::hash<state_set>{}(s.obligations));
      return seed;
    }
  };

  explicit tight_rank_complement(const nbw& a);

  const std::vector<std::string>& alphabet() const { return a_.alphabet(); }
  void initial_states(std::vector<state>& out) const;
  void successors(const state& s, symbol_id symbol, std::vector<state>& out) const;
  bool is_accepting(const state& s) const { return s.ranked && s.obligations.empty(); }
  std::string name(const state& s) const;

 private:
  dense_automaton a_;
  int bound_;
};

/// Successor rankings of f on `symbol` that the rank complement may move to.
std::vector<level_ranking> rank_successors(const dense_automaton& a, const level_ranking& f,
                                           symbol_id symbol, int bound, bool tight_only);

nbw build_rank_complement(const nbw& a, std::optional<int> bound = std::nullopt);
nbw build_tight_rank_complement(const nbw& a);

}  // namespace buchi
