#include "buchi/run_dag.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <tuple>

namespace buchi {

namespace {

void check_word(const nbw& a, const lasso_word& w) {
  w.check_alphabet(a.alphabet_size());
}

}  // namespace

run_dag_prefix build_dag_prefix(const nbw& a, const lasso_word& w, std::size_t depth) {
  if (depth == 0) throw input_error("run DAG depth must be at least 1");
  check_word(a, w);
  dense_automaton d(a);
  run_dag_prefix dag;
  dag.accepting = d.accepting();
  dag.levels.push_back(d.initial());
  for (std::size_t i = 0; i + 1 < depth; ++i) {
    std::vector<state_set> out(d.num_states());
    state_set next;
    for (state_id q : dag.levels[i]) {
      out[q] = d.successors(q, w[i]);
      next |= out[q];
    }
    dag.edges.push_back(std::move(out));
    dag.levels.push_back(next);
  }
  return dag;
}

std::vector<ordered_partition> level_partitions(const nbw& a, const lasso_word& w,
                                                std::size_t depth) {
  if (depth == 0) throw input_error("run DAG depth must be at least 1");
  check_word(a, w);
  dense_automaton d(a);
  std::vector<ordered_partition> out{initial_partition(d, d.initial())};
  for (std::size_t i = 0; i + 1 < depth; ++i) out.push_back(sigma_successor(d, out.back(), w[i]));
  return out;
}

run_dag_prefix prune_edges(const run_dag_prefix& dag) {
  run_dag_prefix out = dag;
  if (dag.levels.empty()) return out;
  std::vector<state_set> classes;
  auto split = [&](state_set s) {
    if (state_set plain = s - dag.accepting; !plain.empty()) classes.push_back(plain);
    if (state_set acc = s & dag.accepting; !acc.empty()) classes.push_back(acc);
  };
  split(dag.levels[0]);
  for (std::size_t i = 0; i < dag.edges.size(); ++i) {
    std::vector<int> owner(max_dense_states, -1);
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (state_id q : classes[c])
        for (state_id r : dag.edges[i][q]) owner[r] = static_cast<int>(c);
    std::vector<state_set> next_classes;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      state_set owned;
      for (state_id q : classes[c]) {
        state_set kept;
        for (state_id r : dag.edges[i][q])
          if (owner[r] == static_cast<int>(c)) kept.insert(r);
        out.edges[i][q] = kept;
        owned |= kept;
      }
      if (state_set plain = owned - dag.accepting; !plain.empty()) next_classes.push_back(plain);
      if (state_set acc = owned & dag.accepting; !acc.empty()) next_classes.push_back(acc);
    }
    classes = std::move(next_classes);
  }
  return out;
}

periodic_dag::periodic_dag(const nbw& a, const lasso_word& w, std::optional<std::size_t> k)
    : a_(a), k_(k) {
  check_word(a, w);
  constexpr std::size_t unlabeled = std::numeric_limits<std::size_t>::max();
  using key = std::tuple<ordered_partition, std::vector<bool>, std::size_t, std::size_t>;
  std::map<key, std::size_t> seen;
  std::vector<std::size_t> phases;

  ordered_partition current = initial_partition(a_, a_.initial());
  std::vector<bool> labels;
  std::size_t phase = 0;
  for (std::size_t i = 0;; ++i) {
    bool labeled = k_ && i > *k_;
    bool before_k = k_ && i <= *k_;
    key fingerprint{current, labels, phase, before_k ? i : unlabeled};
    auto [it, inserted] = seen.emplace(fingerprint, i);
    if (!inserted) {
      stem_ = it->second;
      period_ = i - stem_;
      break;
    }
    partitions_.push_back(current);
    labels_.push_back(labels);
    letters_.push_back(w.at_phase(phase));
    phases.push_back(phase);

    symbol_id sym = w.at_phase(phase);
    auto owner = successor_owners(a_, current, sym);
    ordered_partition next = sigma_successor(a_, current, sym);
    std::vector<bool> next_labels;
    if (k_ && i + 1 > *k_) {
      for (state_set c : next.classes()) {
        state_id member = *c.begin();
        auto parent = static_cast<std::size_t>(owner[member]);
        bool parent_top = labeled ? labels[parent] : true;
        next_labels.push_back(parent_top && !a_.is_accepting(member));
      }
    }
    current = std::move(next);
    labels = std::move(next_labels);
    phase = w.next_phase(phase);
  }

  std::size_t n = a_.num_states();
  succ_.assign(num_levels(), std::vector<state_set>(n));
  pruned_.assign(num_levels(), std::vector<state_set>(n));
  for (std::size_t level = 0; level < num_levels(); ++level) {
    const ordered_partition& p = partitions_[level];
    auto owner = successor_owners(a_, p, letters_[level]);
    for (std::size_t c = 0; c < p.size(); ++c)
      for (state_id q : p[c]) {
        succ_[level][q] = a_.successors(q, letters_[level]);
        for (state_id r : succ_[level][q])
          if (owner[r] == static_cast<int>(c)) pruned_[level][q].insert(r);
      }
  }
}

node_set periodic_dag::all_nodes() const {
  node_set out;
  for (const auto& p : partitions_) out.push_back(p.support());
  return out;
}

node_set periodic_dag::accepting_nodes() const {
  node_set out = all_nodes();
  for (auto& s : out) s &= a_.accepting();
  return out;
}

namespace {

node_set intersect(node_set x, const node_set& y) {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] &= y[i];
  return x;
}

node_set subtract(node_set x, const node_set& y) {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] -= y[i];
  return x;
}

bool is_empty_set(const node_set& x) {
  return std::ranges::all_of(x, [](state_set s) { return s.empty(); });
}

}  // namespace

node_set infinite_nodes(const periodic_dag& g, const node_set& within, bool pruned) {
  node_set x = within;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t level = 0; level < g.num_levels(); ++level) {
      std::size_t next = g.next(level);
      for (state_id q : x[level]) {
        state_set succ = pruned ? g.pruned_successors(level, q) : g.successors(level, q);
        if (!succ.intersects(x[next])) {
          x[level].erase(q);
          changed = true;
        }
      }
    }
  }
  return x;
}

node_set reaching_nodes(const periodic_dag& g, const node_set& within, const node_set& targets,
                        bool pruned) {
  node_set y = intersect(targets, within);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t level = 0; level < g.num_levels(); ++level) {
      std::size_t next = g.next(level);
      for (state_id q : within[level] - y[level]) {
        state_set succ = pruned ? g.pruned_successors(level, q) : g.successors(level, q);
        if (succ.intersects(y[next])) {
          y[level].insert(q);
          changed = true;
        }
      }
    }
  }
  return y;
}

node_set finite_in_pruned(const periodic_dag& g) {
  node_set all = g.all_nodes();
  return subtract(all, infinite_nodes(g, all, true));
}

node_set g_double_prime(const periodic_dag& g) { return infinite_nodes(g, g.all_nodes(), true); }

bool has_accepting_path(const periodic_dag& g) {
  // An accepting node lies on a cycle of the quotient iff it recurs on an
  // infinite path; every quotient node is reachable from level 0.
  std::size_t levels = g.num_levels();
  for (std::size_t level = g.stem(); level < levels; ++level) {
    for (state_id v : g.states(level) & g.automaton().accepting()) {
      node_set seen(levels);
      std::vector<std::pair<std::size_t, state_id>> stack;
      auto visit = [&](std::size_t l, state_set targets) {
        for (state_id r : targets - seen[l]) {
          seen[l].insert(r);
          stack.emplace_back(l, r);
        }
      };
      visit(g.next(level), g.successors(level, v));
      while (!stack.empty()) {
        auto [l, q] = stack.back();
        stack.pop_back();
        if (l == level && q == v) return true;
        visit(g.next(l), g.successors(l, q));
      }
    }
  }
  return false;
}

bool g_double_prime_has_infinitely_many_f_nodes(const periodic_dag& g) {
  node_set reduced = g_double_prime(g);
  for (std::size_t level = g.stem(); level < g.num_levels(); ++level)
    if (reduced[level].intersects(g.automaton().accepting())) return true;
  return false;
}

std::size_t stabilization_level(const periodic_dag& g) {
  node_set reduced = g_double_prime(g);
  std::size_t levels = g.num_levels();
  std::vector<std::size_t> count(levels, 0);
  for (std::size_t level = 0; level < levels; ++level)
    for (state_set c : g.partition(level).classes())
      if (c.intersects(reduced[level])) ++count[level];
  for (std::size_t level = g.stem(); level < levels; ++level)
    if (count[level] != count[g.stem()])
      throw std::logic_error("class count of the reduced DAG varies within the period");
  std::size_t stable = g.stem();
  while (stable > 0 && count[stable - 1] == count[stable]) --stable;
  return stable;
}

std::optional<std::size_t> f_finite_level(const periodic_dag& g) {
  node_set infinite = infinite_nodes(g, g.all_nodes(), true);
  const state_set acc = g.automaton().accepting();
  for (std::size_t level = g.stem(); level < g.num_levels(); ++level)
    if (infinite[level].intersects(acc)) return std::nullopt;
  std::size_t k = 0;
  for (std::size_t level = 0; level < g.stem(); ++level)
    if (infinite[level].intersects(acc)) k = level;
  return k;
}

namespace {

node_ranking empty_ranking(const periodic_dag& g) {
  return node_ranking(g.num_levels(), std::vector<int>(g.automaton().num_states(), -1));
}

}  // namespace

node_ranking prospective_ranking(const periodic_dag& g) {
  node_ranking rank = empty_ranking(g);
  node_set current = g.all_nodes();
  const node_set accepting = g.accepting_nodes();
  const int m = g.automaton().max_rank();
  for (int i = 0; i <= m && !is_empty_set(current); ++i) {
    node_set next = (i % 2 == 0) ? infinite_nodes(g, current, false)
                                 : reaching_nodes(g, current, intersect(accepting, current), false);
    node_set removed = subtract(current, next);
    for (std::size_t level = 0; level < g.num_levels(); ++level)
      for (state_id q : removed[level]) rank[level][q] = i;
    current = std::move(next);
  }
  if (!is_empty_set(current)) throw not_rejecting();
  return rank;
}

std::vector<std::vector<bool>> lambda_labels(const periodic_dag& g) {
  auto k = g.retrospection_level();
  if (!k) throw std::logic_error("lambda labels need a DAG built with a retrospection level");
  std::vector<std::vector<bool>> out(g.num_levels(),
                                     std::vector<bool>(g.automaton().num_states(), true));
  for (std::size_t level = 0; level < g.num_levels(); ++level) {
    if (level <= *k) continue;
    const auto& p = g.partition(level);
    for (std::size_t c = 0; c < p.size(); ++c)
      for (state_id q : p[c]) out[level][q] = g.class_labels(level)[c];
  }
  return out;
}

bool is_legal(const periodic_dag& g) {
  auto labels = lambda_labels(g);
  node_set finite = finite_in_pruned(g);
  for (std::size_t level = 0; level < g.num_levels(); ++level)
    for (state_id q : g.states(level))
      if (!labels[level][q] && !finite[level].contains(q)) return false;
  return true;
}

node_ranking retrospective_ranking(const periodic_dag& g) {
  auto k = g.retrospection_level();
  if (!k) throw std::logic_error("retrospective ranking needs a retrospection level");
  node_ranking rank = empty_ranking(g);
  const int m = g.automaton().max_rank();
  for (std::size_t level = 0; level < g.num_levels(); ++level) {
    const auto& p = g.partition(level);
    if (level <= *k) {
      for (state_id q : p.support()) rank[level][q] = m;
      continue;
    }
    const auto& labels = g.class_labels(level);
    int larger_top = 0;
    for (std::size_t c = p.size(); c-- > 0;) {
      int r = 2 * larger_top + (labels[c] ? 1 : 0);
      for (state_id q : p[c]) rank[level][q] = r;
      if (labels[c]) ++larger_top;
    }
  }
  return rank;
}

ranking_check check_ranking(const periodic_dag& g, const node_ranking& r) {
  ranking_check out;
  out.is_ranking = true;
  const state_set acc = g.automaton().accepting();
  for (std::size_t level = 0; level < g.num_levels(); ++level) {
    for (state_id q : g.states(level)) {
      int rq = r[level][q];
      out.bound = std::max(out.bound, rq);
      if (rq < 0 || (acc.contains(q) && rq % 2 != 0)) out.is_ranking = false;
      for (state_id s : g.successors(level, q))
        if (r[g.next(level)][s] > rq) out.is_ranking = false;
    }
  }
  if (!out.is_ranking) return out;
  out.is_odd = true;
  for (int e = 0; e <= out.bound && out.is_odd; e += 2) {
    node_set same(g.num_levels());
    for (std::size_t level = 0; level < g.num_levels(); ++level)
      for (state_id q : g.states(level))
        if (r[level][q] == e) same[level].insert(q);
    if (!is_empty_set(infinite_nodes(g, same, false))) out.is_odd = false;
  }
  return out;
}

std::vector<split_level> reduced_split_tree(const nbw& a, const lasso_word& w, std::size_t depth) {
  if (depth == 0) throw input_error("split tree depth must be at least 1");
  check_word(a, w);
  dense_automaton d(a);
  std::vector<split_level> tree;
  split_level level0;
  if (state_set plain = d.initial() - d.accepting(); !plain.empty()) level0.push_back(plain);
  if (state_set acc = d.initial() & d.accepting(); !acc.empty()) level0.push_back(acc);
  tree.push_back(level0);
  for (std::size_t i = 0; i + 1 < depth; ++i) {
    const split_level& current = tree.back();
    split_level reversed;
    state_set claimed;
    for (std::size_t j = current.size(); j-- > 0;) {
      state_set succ = d.successors(current[j], w[i]);
      state_set right = (succ & d.accepting()) - claimed;
      state_set left = (succ - d.accepting()) - claimed;
      if (!right.empty()) reversed.push_back(right);
      if (!left.empty()) reversed.push_back(left);
      claimed |= succ;
    }
    tree.emplace_back(reversed.rbegin(), reversed.rend());
  }
  return tree;
}

}  // namespace buchi
