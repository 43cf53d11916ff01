#pragma once

#include <string>
#include <vector>

#include "buchi/nbw.hpp"
#include "buchi/state_set.hpp"

namespace buchi {

/// Bit-parallel copy of an automaton with at most 64 states, used by the
/// run-DAG analyses and the subset-based constructions.
class dense_automaton {
 public:
  explicit dense_automaton(const nbw& a);

  std::size_t num_states() const { return n_; }
  std::size_t alphabet_size() const { return alphabet_.size(); }
  const std::vector<std::string>& alphabet() const { return alphabet_; }
  const std::string& state_name(state_id q) const { return names_[q]; }
  const std::vector<std::string>& state_names() const { return names_; }

  state_set initial() const { return initial_; }
  state_set accepting() const { return accepting_; }
  state_set all_states() const { return state_set::universe(n_); }
  bool is_accepting(state_id q) const { return accepting_.contains(q); }

  state_set successors(state_id q, symbol_id s) const { return succ_[q * alphabet_.size() + s]; }
  state_set successors(state_set states, symbol_id s) const {
    state_set out;
    for (state_id q : states) out |= successors(q, s);
    return out;
  }
  /// Members of `states` with an s-edge into r.
  state_set predecessors(state_id r, symbol_id s, state_set states) const {
    state_set out;
    for (state_id q : states)
      if (successors(q, s).contains(r)) out.insert(q);
    return out;
  }

  /// 2 * |Q \ F|, the rank bound of the complement constructions.
  int max_rank() const { return static_cast<int>(2 * (n_ - accepting_.size())); }

  /// States sorted by name, the order used for canonical state rendering.
  const std::vector<state_id>& by_name() const { return by_name_; }
  /// "{a,b}" with members sorted by name.
  std::string render(state_set s) const;

 private:
  std::size_t n_;
  std::vector<std::string> alphabet_;
  std::vector<std::string> names_;
  std::vector<state_id> by_name_;
  state_set initial_;
  state_set accepting_;
  std::vector<state_set> succ_;
};

}  // namespace buchi
