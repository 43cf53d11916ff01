#include "buchi/partition.hpp"

#include <stdexcept>

#include "buchi/fault.hpp"

namespace buchi {

ordered_partition::ordered_partition(std::vector<state_set> classes) : classes_(std::move(classes)) {
  state_set seen;
  for (state_set c : classes_) {
    if (c.empty()) throw std::invalid_argument("ordered_partition: empty class");
    if (c.intersects(seen)) throw std::invalid_argument("ordered_partition: overlapping classes");
    seen |= c;
  }
}

state_set ordered_partition::support() const {
  state_set s;
  for (state_set c : classes_) s |= c;
  return s;
}

int ordered_partition::class_of(state_id q) const {
  for (std::size_t i = 0; i < classes_.size(); ++i)
    if (classes_[i].contains(q)) return static_cast<int>(i);
  return -1;
}

std::string render(const dense_automaton& a, const ordered_partition& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) out += '|';
    out += a.render(p[i]);
  }
  return out + "]";
}

ordered_partition initial_partition(const dense_automaton& a, state_set states) {
  std::vector<state_set> classes;
  if (state_set plain = states - a.accepting(); !plain.empty()) classes.push_back(plain);
  if (state_set acc = states & a.accepting(); !acc.empty()) classes.push_back(acc);
  return ordered_partition(std::move(classes));
}

std::vector<int> successor_owners(const dense_automaton& a, const ordered_partition& p,
                                  symbol_id symbol) {
  std::vector<int> owner(a.num_states(), -1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    state_set targets = a.successors(p[i], symbol);
    for (state_id r : targets) {
      if (fault_active(fault::successor_min_owner) && owner[r] != -1) continue;
      owner[r] = static_cast<int>(i);
    }
  }
  return owner;
}

state_set restricted_successors(const dense_automaton& a, const ordered_partition& p, state_id q,
                                symbol_id symbol) {
  int cls = p.class_of(q);
  if (cls < 0) return {};
  auto owner = successor_owners(a, p, symbol);
  state_set out;
  for (state_id r : a.successors(q, symbol))
    if (owner[r] == cls) out.insert(r);
  return out;
}

ordered_partition sigma_successor(const dense_automaton& a, const ordered_partition& p,
                                  symbol_id symbol) {
  auto owner = successor_owners(a, p, symbol);
  std::vector<state_set> owned(p.size());
  for (state_id r = 0; r < a.num_states(); ++r)
    if (owner[r] >= 0) owned[static_cast<std::size_t>(owner[r])].insert(r);
  std::vector<state_set> classes;
  for (state_set children : owned) {
    state_set plain = children - a.accepting();
    state_set acc = children & a.accepting();
    if (fault_active(fault::slice_child_order)) std::swap(plain, acc);
    if (!plain.empty()) classes.push_back(plain);
    if (!acc.empty()) classes.push_back(acc);
  }
  return ordered_partition(std::move(classes));
}

}  // namespace buchi
