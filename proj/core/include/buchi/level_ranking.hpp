#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "buchi/dense.hpp"
#include "buchi/partition.hpp"

namespace buchi {

/// Rank value marking a state absent from the level.
inline constexpr int bottom = -1;

/// A map from states to ranks, with `bottom` for states not on the level.
class level_ranking {
 public:
  level_ranking() = default;
  explicit level_ranking(std::size_t n) : ranks_(n, bottom) {}

  std::size_t size() const { return ranks_.size(); }
  int operator[](state_id q) const { return ranks_[q]; }
  void set(state_id q, int rank) { ranks_[q] = static_cast<std::int16_t>(rank); }

  /// States with a rank.
  state_set support() const;
  state_set odd() const;
  state_set even() const;
  state_set with_rank(int rank) const;
  /// Largest rank, or -1 when every state is bottom.
  int max_rank() const;

  bool operator==(const level_ranking&) const = default;
  auto operator<=>(const level_ranking&) const = default;

 private:
  std::vector<std::int16_t> ranks_;
};

/// "[p:3,q:2,r:⊥]" ordered by state name.
std::string render(const dense_automaton& a, const level_ranking& f);

/// Every odd rank below the maximum is used; vacuous when all states are bottom.
bool is_tight(const level_ranking& f);
/// Ranks within [0, bound] and no accepting state holds an odd rank.
bool is_level_ranking(const dense_automaton& a, const level_ranking& f, int bound);
/// Every ranked state's successors are ranked, no higher than their predecessor.
bool follows_under(const dense_automaton& a, const level_ranking& f, const level_ranking& next,
                   symbol_id symbol);

/// Compacts ranks so that odd ranks become 1, 3, 5, ... while each rank keeps
/// its parity.
level_ranking tighten(const level_ranking& f);
/// Successor ranking: minimum over ranked predecessors, lowered to even for
/// accepting states, then tightened.
level_ranking sigma_successor(const dense_automaton& a, const level_ranking& f, symbol_id symbol);
/// The tight ranking of a preordered subset: twice the number of larger
/// non-accepting classes, plus one for non-accepting states.
level_ranking to_rank(const dense_automaton& a, const ordered_partition& p);

/// Calls fn(f) for every ranking with support exactly `support`, where state q
/// ranges over [0, upper[q]] and accepting states take even ranks only.
/// Order: lexicographic by state name, then by rank.
template <class Fn>
void for_each_ranking(const dense_automaton& a, state_set support, const std::vector<int>& upper,
                      Fn&& fn) {
  std::vector<state_id> order;
  for (state_id q : a.by_name())
    if (support.contains(q)) order.push_back(q);
  for (state_id q : order)
    if (upper[q] < 0) return;
  level_ranking f(a.num_states());
  auto step = [&](state_id q) { return a.is_accepting(q) ? 2 : 1; };
  for (state_id q : order) f.set(q, 0);
  while (true) {
    fn(static_cast<const level_ranking&>(f));
    std::size_t i = order.size();
    while (i > 0) {
      state_id q = order[i - 1];
      int next = f[q] + step(q);
      if (next <= upper[q]) {
        f.set(q, next);
        break;
      }
      f.set(q, 0);
      --i;
    }
    if (i == 0) return;
  }
}

}  // namespace buchi

template <>
struct std::hash<buchi::level_ranking> {
  std::size_t operator()(const buchi::level_ranking& f) const noexcept {
    std::size_t seed = f.size();
    for (std::size_t q = 0; q < f.size(); ++q)
      buchi::hash_combine(seed, static_cast<std::size_t>(f[static_cast<buchi::state_id>(q)] + 1));
    return seed;
  }
};
