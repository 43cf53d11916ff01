#include "buchi/retro_complement.hpp"

#include "buchi/fault.hpp"
#include "buchi/search.hpp"

namespace buchi {

namespace {

retro_state stage_one(ordered_partition p) {
  retro_state s;
  s.partition = std::move(p);
  return s;
}

retro_state stage_two(level_ranking f, state_set obligations = {}, int index = 0) {
  retro_state s;
  s.ranked = true;
  s.f = std::move(f);
  s.obligations = obligations;
  s.index = index;
  return s;
}

std::string stage_two_name(const dense_automaton& a, const retro_state& s) {
  return "S2:f=" + render(a, s.f) + ";O=" + a.render(s.obligations);
}

}  // namespace

retro_state ranked_successor(const dense_automaton& a, const retro_state& s, symbol_id symbol) {
  level_ranking next = sigma_successor(a, s.f, symbol);
  state_set obligations =
      s.obligations.empty() ? next.even() : a.successors(s.obligations, symbol) - next.odd();
  return stage_two(std::move(next), obligations);
}

retro_complement::retro_complement(const nbw& a) : a_(a) {}

void retro_complement::initial_states(std::vector<state>& out) const {
  out.assign(1, stage_one(initial_partition(a_, a_.initial())));
}

void retro_complement::successors(const state& s, symbol_id symbol, std::vector<state>& out) const {
  out.clear();
  if (!s.ranked) {
    ordered_partition next = sigma_successor(a_, s.partition, symbol);
    level_ranking f = to_rank(a_, next);
    out.push_back(stage_one(std::move(next)));
    out.push_back(stage_two(std::move(f)));
    return;
  }
  out.push_back(ranked_successor(a_, s, symbol));
}

bool retro_complement::is_accepting(const state& s) const {
  if (!s.ranked) return false;
  return s.obligations.empty() || fault_active(fault::retro_accept_all_stage2);
}

std::string retro_complement::name(const state& s) const {
  if (!s.ranked) return "S1:" + render(a_, s.partition);
  return stage_two_name(a_, s);
}

schewe_complement::schewe_complement(const nbw& a) : a_(a) {}

void schewe_complement::initial_states(std::vector<state>& out) const {
  out.assign(1, stage_one(initial_partition(a_, a_.initial())));
}

void schewe_complement::successors(const state& s, symbol_id symbol, std::vector<state>& out) const {
  out.clear();
  if (!s.ranked) {
    ordered_partition next = sigma_successor(a_, s.partition, symbol);
    level_ranking f = to_rank(a_, next);
    out.push_back(stage_one(std::move(next)));
    out.push_back(stage_two(std::move(f)));
    return;
  }
  level_ranking next = sigma_successor(a_, s.f, symbol);
  if (!s.obligations.empty()) {
    state_set obligations =
        (a_.successors(s.obligations, symbol) - next.odd()) & next.with_rank(s.index);
    out.push_back(stage_two(std::move(next), obligations, s.index));
    return;
  }
  int top = next.max_rank();
  int index = top < 0 ? 0 : (s.index + 2) % (top + 1);
  state_set obligations = next.with_rank(index);
  out.push_back(stage_two(std::move(next), obligations, index));
}

std::string schewe_complement::name(const state& s) const {
  if (!s.ranked) return "S1:" + render(a_, s.partition);
  return stage_two_name(a_, s) + ";i=" + std::to_string(s.index);
}

symbolic_complement::symbolic_complement(const nbw& a) : a_(a) {}

void symbolic_complement::initial_states(std::vector<state>& out) const {
  retro_state s;
  s.subset = a_.initial();
  out.assign(1, s);
}

void symbolic_complement::successors(const state& s, symbol_id symbol,
                                     std::vector<state>& out) const {
  out.clear();
  if (!s.ranked) {
    state_set next = a_.successors(s.subset, symbol);
    retro_state plain;
    plain.subset = next;
    out.push_back(plain);
    std::vector<int> upper(a_.num_states(), a_.max_rank());
    for_each_ranking(a_, next, upper, [&](const level_ranking& f) { out.push_back(stage_two(f)); });
    return;
  }
  out.push_back(ranked_successor(a_, s, symbol));
}

std::string symbolic_complement::name(const state& s) const {
  if (!s.ranked) return "S1:" + a_.render(s.subset);
  return stage_two_name(a_, s);
}

nbw build_retro_complement(const nbw& a) { return materialize(retro_complement(a)); }
nbw build_schewe_complement(const nbw& a) { return materialize(schewe_complement(a)); }
nbw build_symbolic_complement(const nbw& a, std::size_t budget) {
  return materialize(symbolic_complement(a), budget);
}

}  // namespace buchi
