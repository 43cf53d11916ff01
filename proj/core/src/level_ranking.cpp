#include "buchi/level_ranking.hpp"

#include <algorithm>
#include <set>

#include "buchi/fault.hpp"

namespace buchi {

state_set level_ranking::support() const {
  state_set s;
  for (state_id q = 0; q < ranks_.size(); ++q)
    if (ranks_[q] != bottom) s.insert(q);
  return s;
}

state_set level_ranking::odd() const {
  state_set s;
  for (state_id q = 0; q < ranks_.size(); ++q)
    if (ranks_[q] != bottom && ranks_[q] % 2 == 1) s.insert(q);
  return s;
}

state_set level_ranking::even() const {
  state_set s;
  for (state_id q = 0; q < ranks_.size(); ++q)
    if (ranks_[q] != bottom && ranks_[q] % 2 == 0) s.insert(q);
  return s;
}

state_set level_ranking::with_rank(int rank) const {
  state_set s;
  for (state_id q = 0; q < ranks_.size(); ++q)
    if (ranks_[q] == rank) s.insert(q);
  return s;
}

int level_ranking::max_rank() const {
  int m = -1;
  for (auto r : ranks_) m = std::max<int>(m, r);
  return m;
}

std::string render(const dense_automaton& a, const level_ranking& f) {
  std::string out = "[";
  bool first = true;
  for (state_id q : a.by_name()) {
    if (!first) out += ',';
    first = false;
    out += a.state_name(q) + ":" + (f[q] == bottom ? std::string("⊥") : std::to_string(f[q]));
  }
  return out + "]";
}

bool is_tight(const level_ranking& f) {
  int m = f.max_rank();
  for (int odd = 1; odd < m; odd += 2)
    if (f.with_rank(odd).empty()) return false;
  return true;
}

bool is_level_ranking(const dense_automaton& a, const level_ranking& f, int bound) {
  if (f.size() != a.num_states()) return false;
  for (state_id q = 0; q < f.size(); ++q) {
    int r = f[q];
    if (r == bottom) continue;
    if (r < 0 || r > bound) return false;
    if (a.is_accepting(q) && r % 2 != 0) return false;
  }
  return true;
}

bool follows_under(const dense_automaton& a, const level_ranking& f, const level_ranking& next,
                   symbol_id symbol) {
  for (state_id q : f.support())
    for (state_id r : a.successors(q, symbol))
      if (next[r] == bottom || next[r] > f[q]) return false;
  return true;
}

level_ranking tighten(const level_ranking& f) {
  std::set<int> odd_ranks;
  for (state_id q = 0; q < f.size(); ++q)
    if (f[q] != bottom && f[q] % 2 == 1) odd_ranks.insert(f[q]);
  level_ranking out(f.size());
  for (state_id q = 0; q < f.size(); ++q) {
    if (f[q] == bottom) continue;
    int gamma = static_cast<int>(std::distance(odd_ranks.begin(), odd_ranks.lower_bound(f[q])));
    out.set(q, 2 * gamma + (f[q] % 2));
  }
  return out;
}

level_ranking sigma_successor(const dense_automaton& a, const level_ranking& f, symbol_id symbol) {
  level_ranking next(a.num_states());
  for (state_id q : f.support())
    for (state_id r : a.successors(q, symbol))
      if (next[r] == bottom || f[q] < next[r]) next.set(r, f[q]);
  for (state_id r : next.support())
    if (a.is_accepting(r) && next[r] % 2 == 1) next.set(r, next[r] - 1);
  level_ranking out = tighten(next);
  if (fault_active(fault::tighten_by_acceptance)) {
    // parity taken from acceptance instead of the rank itself
    for (state_id r : out.support()) {
      int base = out[r] - out[r] % 2;
      out.set(r, base + (a.is_accepting(r) ? 0 : 1));
    }
  }
  return out;
}

level_ranking to_rank(const dense_automaton& a, const ordered_partition& p) {
  level_ranking f(a.num_states());
  int larger_plain = 0;
  for (std::size_t c = p.size(); c-- > 0;) {
    bool accepting = p[c].intersects(a.accepting());
    int parity = accepting ? 0 : 1;
    for (state_id q : p[c]) f.set(q, 2 * larger_plain + parity);
    if (!accepting) ++larger_plain;
  }
  return f;
}

}  // namespace buchi
