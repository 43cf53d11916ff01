#include "buchi/slice_complement.hpp"

#include "buchi/search.hpp"

namespace buchi {

namespace {

/// Restricted successors of every state of the partition on `symbol`.
std::vector<state_set> restricted_all(const dense_automaton& a, const ordered_partition& p,
                                      symbol_id symbol) {
  auto owner = successor_owners(a, p, symbol);
  std::vector<state_set> out(a.num_states());
  for (std::size_t c = 0; c < p.size(); ++c)
    for (state_id q : p[c])
      for (state_id r : a.successors(q, symbol))
        if (owner[r] == static_cast<int>(c)) out[q].insert(r);
  return out;
}

bool labels_follow(const slice_state& current, const std::vector<state_set>& restricted,
                   state_set next_top) {
  for (state_id q : current.partition.support()) {
    bool has_top_child = restricted[q].intersects(next_top);
    if (current.top.contains(q) ? !has_top_child : has_top_child) return false;
  }
  return true;
}

state_set next_obligations(const slice_state& current, const std::vector<state_set>& restricted,
                           state_set next_support, state_set next_top) {
  if (current.obligations.empty()) return next_support - next_top;
  state_set out;
  for (state_id q : current.obligations) out |= restricted[q];
  return out;
}

}  // namespace

bool follows_slice(const dense_automaton& a, const slice_state& current, const slice_state& next,
                   symbol_id symbol) {
  if (next.partition != sigma_successor(a, current.partition, symbol)) return false;
  state_set support = next.partition.support();
  if (!next.top.subset_of(support) || !next.obligations.subset_of(support)) return false;
  auto restricted = restricted_all(a, current.partition, symbol);
  if (!labels_follow(current, restricted, next.top)) return false;
  if (next.obligations != next_obligations(current, restricted, support, next.top)) return false;
  if (current.settled && !next.settled) return false;
  if (next.settled && next.top.intersects(a.accepting())) return false;
  return true;
}

slice_complement::slice_complement(const nbw& a) : a_(a) {}

void slice_complement::initial_states(std::vector<state>& out) const {
  out.clear();
  ordered_partition p = initial_partition(a_, a_.initial());
  std::uint64_t all = a_.initial().bits();
  std::uint64_t sub = all;
  while (true) {
    out.push_back({p, state_set(sub), {}, false});
    if (sub == 0) break;
    sub = (sub - 1) & all;
  }
}

void slice_complement::successors(const state& s, symbol_id symbol, std::vector<state>& out) const {
  out.clear();
  ordered_partition next = sigma_successor(a_, s.partition, symbol);
  state_set support = next.support();
  auto restricted = restricted_all(a_, s.partition, symbol);
  state_set forced_bottom;
  for (state_id q : s.partition.support() - s.top) forced_bottom |= restricted[q];
  std::uint64_t free = (support - forced_bottom).bits();
  std::uint64_t sub = free;
  while (true) {
    state_set top(sub);
    if (labels_follow(s, restricted, top)) {
      state_set obligations = next_obligations(s, restricted, support, top);
      if (!s.settled) out.push_back({next, top, obligations, false});
      if (!top.intersects(a_.accepting())) out.push_back({next, top, obligations, true});
    }
    if (sub == 0) break;
    sub = (sub - 1) & free;
  }
}

std::string slice_complement::name(const state& s) const {
  std::string labels = "[";
  for (std::size_t c = 0; c < s.partition.size(); ++c) {
    if (c > 0) labels += '|';
    bool first = true;
    for (state_id q : a_.by_name()) {
      if (!s.partition[c].contains(q)) continue;
      if (!first) labels += ',';
      first = false;
      labels += s.top.contains(q) ? "⊤" : "⊥";
    }
  }
  labels += "]";
  return render(a_, s.partition) + ";λ=" + labels + ";O=" + a_.render(s.obligations) +
         ";b=" + (s.settled ? "1" : "0");
}

nbw build_slice_complement(const nbw& a) { return materialize(slice_complement(a)); }

}  // namespace buchi
