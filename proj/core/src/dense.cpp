#include "buchi/dense.hpp"

#include <algorithm>
#include <numeric>

namespace buchi {

dense_automaton::dense_automaton(const nbw& a)
    : n_(a.num_states()), alphabet_(a.alphabet()), names_(a.state_names()) {
  if (n_ > max_dense_states)
    throw input_error("construction supports at most " + std::to_string(max_dense_states) +
                      " states, got " + std::to_string(n_));
  succ_.resize(n_ * alphabet_.size());
  for (state_id q = 0; q < n_; ++q) {
    if (a.is_initial(q)) initial_.insert(q);
    if (a.is_accepting(q)) accepting_.insert(q);
    for (symbol_id s = 0; s < alphabet_.size(); ++s)
      for (state_id r : a.successors(q, s)) succ_[q * alphabet_.size() + s].insert(r);
  }
  by_name_.resize(n_);
  std::iota(by_name_.begin(), by_name_.end(), state_id{0});
  std::ranges::sort(by_name_, [&](state_id x, state_id y) { return names_[x] < names_[y]; });
}

std::string dense_automaton::render(state_set s) const {
  std::string out = "{";
  bool first = true;
  for (state_id q : by_name_) {
    if (!s.contains(q)) continue;
    if (!first) out += ',';
    out += names_[q];
    first = false;
  }
  return out + "}";
}

}  // namespace buchi
