#pragma once

// Generic on-the-fly graph algorithms shared by explicit automata and the
// lazily enumerated complement constructions.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "buchi/nbw.hpp"

namespace buchi {

/// A Büchi automaton whose states are enumerated on demand.
template <class A>
concept omega_automaton = requires(const A& a, const typename A::state& s, symbol_id sym,
                                   std::vector<typename A::state>& out) {
  typename A::state_hash;
  { a.alphabet() } -> std::convertible_to<const std::vector<std::string>&>;
  a.initial_states(out);
  a.successors(s, sym, out);
  { a.is_accepting(s) } -> std::same_as<bool>;
  { a.name(s) } -> std::convertible_to<std::string>;
};

/// Raised when explicit materialization would exceed the caller's state budget.
class budget_exceeded : public std::runtime_error {
 public:
  explicit budget_exceeded(std::size_t budget)
      : std::runtime_error("state budget of " + std::to_string(budget) +
                           " exceeded; use on-the-fly queries instead"),
        budget_(budget) {}
  std::size_t budget() const { return budget_; }

 private:
  std::size_t budget_;
};

/// Adapts an explicit nbw to the omega_automaton interface.
class explicit_view {
 public:
  using state = state_id;
  using state_hash = std::hash<state_id>;

  explicit explicit_view(const nbw& a) : a_(&a) {}
  const std::vector<std::string>& alphabet() const { return a_->alphabet(); }
  void initial_states(std::vector<state>& out) const {
    out.clear();
    for (state_id q = 0; q < a_->num_states(); ++q)
      if (a_->is_initial(q)) out.push_back(q);
  }
  void successors(state q, symbol_id sym, std::vector<state>& out) const {
    auto succ = a_->successors(q, sym);
    out.assign(succ.begin(), succ.end());
  }
  bool is_accepting(state q) const { return a_->is_accepting(q); }
  std::string name(state q) const { return a_->state_name(q); }

 private:
  const nbw* a_;
};

namespace detail {

/// Iterative Tarjan over a lazily generated graph. Stops at the first
/// nontrivial strongly connected component containing an accepting node.
template <class Node, class Hash, class InitFn, class SuccFn, class AccFn>
bool reachable_accepting_cycle(InitFn&& initial, SuccFn&& successors, AccFn&& accepting) {
  std::unordered_map<Node, int, Hash> index_of;
  std::vector<Node> nodes;
  std::vector<int> lowlink;
  std::vector<int> order;
  std::vector<char> on_stack;
  std::vector<int> scc_stack;

  struct frame {
    int node;
    std::vector<int> succ;
    std::size_t next = 0;
    bool self_loop = false;
  };
  std::vector<frame> call_stack;
  std::vector<Node> buffer;
  int counter = 0;

  auto intern = [&](const Node& n) -> std::pair<int, bool> {
    auto [it, inserted] = index_of.try_emplace(n, static_cast<int>(nodes.size()));
    if (inserted) {
      nodes.push_back(n);
      lowlink.push_back(-1);
      order.push_back(-1);
      on_stack.push_back(0);
    }
    return {it->second, inserted};
  };

  auto push = [&](int id) {
    order[id] = lowlink[id] = counter++;
    scc_stack.push_back(id);
    on_stack[id] = 1;
    frame f{id, {}, 0, false};
    successors(nodes[id], buffer);
    f.succ.reserve(buffer.size());
    for (const Node& s : buffer) {
      int sid = intern(s).first;
      if (sid == id) f.self_loop = true;
      f.succ.push_back(sid);
    }
    call_stack.push_back(std::move(f));
  };

  std::vector<Node> roots;
  initial(roots);
  for (const Node& r : roots) {
    int rid = intern(r).first;
    if (order[rid] != -1) continue;
    push(rid);
    while (!call_stack.empty()) {
      frame& top = call_stack.back();
      if (top.next < top.succ.size()) {
        int s = top.succ[top.next++];
        if (order[s] == -1) {
          push(s);
        } else if (on_stack[s]) {
          lowlink[top.node] = std::min(lowlink[top.node], order[s]);
        }
        continue;
      }
      int v = top.node;
      bool self_loop = top.self_loop;
      call_stack.pop_back();
      if (!call_stack.empty())
        lowlink[call_stack.back().node] = std::min(lowlink[call_stack.back().node], lowlink[v]);
      if (lowlink[v] != order[v]) continue;
      bool nontrivial = self_loop || scc_stack.back() != v;
      bool has_accepting = false;
      int w;
      do {
        w = scc_stack.back();
        scc_stack.pop_back();
        on_stack[w] = 0;
        if (accepting(nodes[w])) has_accepting = true;
      } while (w != v);
      if (nontrivial && has_accepting) return true;
    }
  }
  return false;
}

template <class S, class H>
struct pair_hash {
  std::size_t operator()(const std::pair<S, std::size_t>& p) const {
    std::size_t seed = H{}(p.first);
    hash_combine(seed, p.second);
    return seed;
  }
};

}  // namespace detail

/// On-the-fly membership: explores the product with the positions of w.
template <omega_automaton A>
bool accepts(const A& a, const lasso_word& w) {
  using state = typename A::state;
  using node = std::pair<state, std::size_t>;
  w.check_alphabet(a.alphabet().size());
  std::vector<state> buffer;
  return detail::reachable_accepting_cycle<node, detail::pair_hash<state, typename A::state_hash>>(
      [&](std::vector<node>& out) {
        a.initial_states(buffer);
        out.clear();
        for (const state& s : buffer) out.emplace_back(s, 0);
      },
      [&](const node& n, std::vector<node>& out) {
        a.successors(n.first, w.at_phase(n.second), buffer);
        std::size_t next = w.next_phase(n.second);
        out.clear();
        for (const state& s : buffer) out.emplace_back(s, next);
      },
      [&](const node& n) { return a.is_accepting(n.first); });
}

/// On-the-fly emptiness check.
template <omega_automaton A>
bool language_empty(const A& a) {
  using state = typename A::state;
  std::vector<state> buffer;
  return !detail::reachable_accepting_cycle<state, typename A::state_hash>(
      [&](std::vector<state>& out) { a.initial_states(out); },
      [&](const state& s, std::vector<state>& out) {
        out.clear();
        for (symbol_id sym = 0; sym < a.alphabet().size(); ++sym) {
          a.successors(s, sym, buffer);
          out.insert(out.end(), buffer.begin(), buffer.end());
        }
      },
      [&](const state& s) { return a.is_accepting(s); });
}

/// Lazy two-flag intersection of two omega automata over the same alphabet.
template <omega_automaton A, omega_automaton B>
class product_view {
 public:
  struct state {
    typename A::state left;
    typename B::state right;
    int flag = 0;
    bool operator==(const state&) const = default;
  };
  struct state_hash {
    std::size_t operator()(const state& s) const {
      std::size_t seed = typename A::state_hash{}(s.left);
      hash_combine(seed, typename B::state_hash{}(s.right));
      hash_combine(seed, static_cast<std::size_t>(s.flag));
      return seed;
    }
  };

  product_view(const A& a, const B& b) : a_(&a), b_(&b) {
    if (a.alphabet() != b.alphabet()) throw input_error("product: alphabet mismatch");
  }
  const std::vector<std::string>& alphabet() const { return a_->alphabet(); }
  void initial_states(std::vector<state>& out) const {
    std::vector<typename A::state> la;
    std::vector<typename B::state> lb;
    a_->initial_states(la);
    b_->initial_states(lb);
    out.clear();
    for (const auto& x : la)
      for (const auto& y : lb) out.push_back({x, y, 0});
  }
  void successors(const state& s, symbol_id sym, std::vector<state>& out) const {
    std::vector<typename A::state> la;
    std::vector<typename B::state> lb;
    a_->successors(s.left, sym, la);
    b_->successors(s.right, sym, lb);
    int flag = s.flag;
    if (flag == 0 && a_->is_accepting(s.left)) flag = 1;
    else if (flag == 1 && b_->is_accepting(s.right)) flag = 0;
    out.clear();
    for (const auto& x : la)
      for (const auto& y : lb) out.push_back({x, y, flag});
  }
  bool is_accepting(const state& s) const { return s.flag == 0 && a_->is_accepting(s.left); }
  std::string name(const state& s) const {
    return "(" + a_->name(s.left) + "," + b_->name(s.right) + "," + std::to_string(s.flag) + ")";
  }

 private:
  const A* a_;
  const B* b_;
};

/// Breadth-first materialization of the reachable part of a lazy automaton.
template <omega_automaton A>
nbw materialize(const A& a, std::size_t budget = static_cast<std::size_t>(-1)) {
  using state = typename A::state;
  nbw result(a.alphabet());
  std::unordered_map<state, state_id, typename A::state_hash> ids;
  std::deque<state> queue;
  std::vector<state> buffer;

  auto intern = [&](const state& s) -> state_id {
    auto it = ids.find(s);
    if (it != ids.end()) return it->second;
    if (ids.size() >= budget) throw budget_exceeded(budget);
    state_id id = result.add_state(a.name(s));
    ids.emplace(s, id);
    if (a.is_accepting(s)) result.set_accepting(id);
    queue.push_back(s);
    return id;
  };

  a.initial_states(buffer);
  for (const state& s : std::vector<state>(buffer)) result.set_initial(intern(s));
  while (!queue.empty()) {
    state s = std::move(queue.front());
    queue.pop_front();
    state_id from = ids.at(s);
    for (symbol_id sym = 0; sym < a.alphabet().size(); ++sym) {
      a.successors(s, sym, buffer);
      for (const state& t : std::vector<state>(buffer)) result.add_transition(from, sym, intern(t));
    }
  }
  return result;
}

}  // namespace buchi
