#include "buchi/rank_complement.hpp"

#include <algorithm>

#include "buchi/fault.hpp"
#include "buchi/search.hpp"

namespace buchi {

std::vector<level_ranking> rank_successors(const dense_automaton& a, const level_ranking& f,
                                           symbol_id symbol, int bound, bool tight_only) {
  std::vector<int> upper(a.num_states(), bound);
  for (state_id q : f.support())
    for (state_id r : a.successors(q, symbol)) upper[r] = std::min(upper[r], f[q]);
  std::vector<level_ranking> out;
  for_each_ranking(a, a.successors(f.support(), symbol), upper, [&](const level_ranking& next) {
    if (!tight_only || is_tight(next)) out.push_back(next);
  });
  return out;
}

namespace {

state_set next_obligations(const dense_automaton& a, state_set obligations,
                           const level_ranking& next, symbol_id symbol) {
  if (obligations.empty()) return next.even();
  state_set moved = a.successors(obligations, symbol);
  if (fault_active(fault::rank_cutpoint_keep_odd)) return moved;
  return moved - next.odd();
}

}  // namespace

rank_complement::rank_complement(const nbw& a, std::optional<int> bound)
    : a_(a), bound_(bound.value_or(dense_automaton(a).max_rank())) {
  if (bound_ < 0) throw input_error("rank bound must be nonnegative");
}

void rank_complement::initial_states(std::vector<state>& out) const {
  level_ranking f(a_.num_states());
  for (state_id q : a_.initial())
    f.set(q, a_.is_accepting(q) ? bound_ - bound_ % 2 : bound_);
  out.assign(1, state{f, {}});
}

void rank_complement::successors(const state& s, symbol_id symbol, std::vector<state>& out) const {
  out.clear();
  for (auto& next : rank_successors(a_, s.f, symbol, bound_, false))
    out.push_back({next, next_obligations(a_, s.obligations, next, symbol)});
}

std::string rank_complement::name(const state& s) const {
  return "f=" + render(a_, s.f) + ";O=" + a_.render(s.obligations);
}

tight_rank_complement::tight_rank_complement(const nbw& a)
    : a_(a), bound_(dense_automaton(a).max_rank()) {}

void tight_rank_complement::initial_states(std::vector<state>& out) const {
  out.assign(1, state{false, a_.initial(), level_ranking(a_.num_states()), {}});
}

void tight_rank_complement::successors(const state& s, symbol_id symbol,
                                       std::vector<state>& out) const {
  out.clear();
  if (!s.ranked) {
    state_set next = a_.successors(s.subset, symbol);
    out.push_back({false, next, level_ranking(a_.num_states()), {}});
    std::vector<int> upper(a_.num_states(), bound_);
    for_each_ranking(a_, next, upper, [&](const level_ranking& f) {
      if (is_tight(f)) out.push_back({true, {}, f, {}});
    });
    return;
  }
  for (auto& next : rank_successors(a_, s.f, symbol, bound_, true))
    out.push_back({true, {}, next, next_obligations(a_, s.obligations, next, symbol)});
}

std::string tight_rank_complement::name(const state& s) const {
  if (!s.ranked) return "S1:" + a_.render(s.subset);
  return "S2:f=" + render(a_, s.f) + ";O=" + a_.render(s.obligations);
}

nbw build_rank_complement(const nbw& a, std::optional<int> bound) {
  return materialize(rank_complement(a, bound));
}

nbw build_tight_rank_complement(const nbw& a) { return materialize(tight_rank_complement(a)); }

}  // namespace buchi
