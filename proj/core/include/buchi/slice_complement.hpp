#pragma once

#include <string>
#include <vector>

#include "buchi/dense.hpp"
#include "buchi/nbw.hpp"
#include "buchi/partition.hpp"

namespace buchi {

/// A preordered subset with a guess of which states are infinite (`top`),
/// the obligation set of bottom states under verification, and the bit that
/// forbids top-labeled accepting states once set.
struct slice_state {
  ordered_partition partition;
  state_set top;
  state_set obligations;
  bool settled = false;
  bool operator==(const slice_state&) const = default;
};

struct slice_state_hash {
  std::size_t operator()(const slice_state& s) const {
    std::size_t seed = std::hash<ordered_partition>{}(s.partition);
    hash_combine(seed, std::hash<state_set>{}(s.top));
    hash_combine(seed, std::hash<state_set>{}(s.obligations));
    hash_combine(seed, s.settled ? 1 : 0);
    return seed;
  }
};

/// Slice-based complement, explored lazily.
class slice_complement {
 public:
  using state = slice_state;
  using state_hash = slice_state_hash;

  explicit slice_complement(const nbw& a);

  const std::vector<std::string>& alphabet() const { return a_.alphabet(); }
  void initial_states(std::vector<state>& out) const;
  void successors(const state& s, symbol_id symbol, std::vector<state>& out) const;
  bool is_accepting(const state& s) const { return s.settled && s.obligations.empty(); }
  std::string name(const state& s) const;

 private:
  dense_automaton a_;
};

/// Whether `next` is a valid successor of `current` on `symbol`.
bool follows_slice(const dense_automaton& a, const slice_state& current, const slice_state& next,
                   symbol_id symbol);

nbw build_slice_complement(const nbw& a);

}  // namespace buchi
