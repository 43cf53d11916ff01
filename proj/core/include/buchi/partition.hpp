#pragma once

#include <string>
#include <vector>

#include "buchi/dense.hpp"
#include "buchi/state_set.hpp"

namespace buchi {

/// A preordered subset of states: disjoint nonempty classes listed from the
/// smallest profile to the largest. Every class is either entirely accepting
/// or entirely non-accepting.
class ordered_partition {
 public:
  ordered_partition() = default;
  explicit ordered_partition(std::vector<state_set> classes);

  const std::vector<state_set>& classes() const { return classes_; }
  std::size_t size() const { return classes_.size(); }
  bool empty() const { return classes_.empty(); }
  const state_set& operator[](std::size_t i) const { return classes_[i]; }
  state_set support() const;
  /// Index of the class containing q, or -1.
  int class_of(state_id q) const;

  bool operator==(const ordered_partition&) const = default;
  auto operator<=>(const ordered_partition&) const = default;

 private:
  std::vector<state_set> classes_;
};

/// "[{p}|{q,t}|{r}]", smallest class first.
std::string render(const dense_automaton& a, const ordered_partition& p);

/// Splits `states` into its non-accepting class followed by its accepting
/// class, dropping whichever is empty.
ordered_partition initial_partition(const dense_automaton& a, state_set states);

/// For every state reachable from p on `symbol`, the index of the largest
/// class with an edge into it, or -1 when none does.
std::vector<int> successor_owners(const dense_automaton& a, const ordered_partition& p,
                                  symbol_id symbol);

/// The successors of q that are not claimed by a strictly larger class.
state_set restricted_successors(const dense_automaton& a, const ordered_partition& p, state_id q,
                                symbol_id symbol);

/// Successor preorder: each class contributes its non-accepting then its
/// accepting restricted successors, in class order.
ordered_partition sigma_successor(const dense_automaton& a, const ordered_partition& p,
                                  symbol_id symbol);

}  // namespace buchi

template <>
struct std::hash<buchi::ordered_partition> {
  std::size_t operator()(const buchi::ordered_partition& p) const noexcept {
    std::size_t seed = p.size();
    for (auto c : p.classes()) buchi::hash_combine(seed, std::hash<buchi::state_set>{}(c));
    return seed;
  }
};
