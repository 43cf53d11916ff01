#include "buchi/nbw.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

#include "buchi/search.hpp"

namespace buchi {

nbw::nbw(std::vector<std::string> alphabet) {
  for (auto& s : alphabet) add_symbol(std::move(s));
}

symbol_id nbw::add_symbol(std::string name) {
  if (symbol_index_.contains(name)) throw input_error("duplicate symbol '" + name + "'");
  auto id = static_cast<symbol_id>(symbol_names_.size());
  symbol_index_.emplace(name, id);
  symbol_names_.push_back(std::move(name));
  for (auto& row : delta_) row.emplace_back();
  return id;
}

state_id nbw::add_state(std::string name) {
  if (state_index_.contains(name)) throw input_error("duplicate state '" + name + "'");
  auto id = static_cast<state_id>(state_names_.size());
  state_index_.emplace(name, id);
  state_names_.push_back(std::move(name));
  initial_.push_back(false);
  accepting_.push_back(false);
  delta_.emplace_back(symbol_names_.size());
  return id;
}

void nbw::check_state(state_id q) const {
  if (q >= num_states()) throw input_error("unknown state id " + std::to_string(q));
}

void nbw::check_symbol(symbol_id s) const {
  if (s >= alphabet_size()) throw input_error("unknown symbol id " + std::to_string(s));
}

void nbw::set_initial(state_id q, bool value) {
  check_state(q);
  initial_[q] = value;
}

void nbw::set_accepting(state_id q, bool value) {
  check_state(q);
  accepting_[q] = value;
}

void nbw::add_transition(state_id from, symbol_id symbol, state_id to) {
  check_state(from);
  check_state(to);
  check_symbol(symbol);
  auto& targets = delta_[from][symbol];
  auto it = std::lower_bound(targets.begin(), targets.end(), to);
  if (it == targets.end() || *it != to) targets.insert(it, to);
}

std::size_t nbw::num_transitions() const {
  std::size_t count = 0;
  for (const auto& row : delta_)
    for (const auto& targets : row) count += targets.size();
  return count;
}

std::optional<state_id> nbw::find_state(std::string_view name) const {
  auto it = state_index_.find(std::string(name));
  if (it == state_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<symbol_id> nbw::find_symbol(std::string_view name) const {
  auto it = symbol_index_.find(std::string(name));
  if (it == symbol_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<state_id> nbw::initial_states() const {
  std::vector<state_id> out;
  for (state_id q = 0; q < num_states(); ++q)
    if (initial_[q]) out.push_back(q);
  return out;
}

std::vector<state_id> nbw::accepting_states() const {
  std::vector<state_id> out;
  for (state_id q = 0; q < num_states(); ++q)
    if (accepting_[q]) out.push_back(q);
  return out;
}

lasso_word::lasso_word(std::vector<symbol_id> stem, std::vector<symbol_id> cycle)
    : stem_(std::move(stem)), cycle_(std::move(cycle)) {
  if (cycle_.empty()) throw input_error("lasso cycle must be nonempty");
}

void lasso_word::check_alphabet(std::size_t alphabet_size) const {
  auto bad = [&](symbol_id s) { return s >= alphabet_size; };
  if (std::ranges::any_of(stem_, bad) || std::ranges::any_of(cycle_, bad))
    throw input_error("lasso word uses a symbol outside the alphabet");
}

std::string to_string(const lasso_word& w, const nbw& a) {
  bool single_char = std::ranges::all_of(a.alphabet(), [](const auto& s) { return s.size() == 1; });
  auto render = [&](const std::vector<symbol_id>& word) {
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (!single_char && i > 0) out += ',';
      out += a.symbol_name(word[i]);
    }
    return out;
  };
  return "u=" + render(w.stem()) + " v=" + render(w.cycle());
}

std::vector<symbol_id> parse_word(const nbw& a, std::string_view text) {
  std::vector<symbol_id> word;
  bool separated = text.find_first_of(", \t") != std::string_view::npos;
  if (!separated) {
    if (auto whole = a.find_symbol(text); whole && !text.empty()) return {*whole};
    for (char c : text) {
      auto s = a.find_symbol(std::string_view(&c, 1));
      if (!s) throw input_error("unknown symbol '" + std::string(1, c) + "' in word");
      word.push_back(*s);
    }
    return word;
  }
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    auto s = a.find_symbol(token);
    if (!s) throw input_error("unknown symbol '" + token + "' in word");
    word.push_back(*s);
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) flush();
    else token += c;
  }
  flush();
  return word;
}

std::vector<state_id> lift_delta(const nbw& a, std::span<const state_id> states, symbol_id symbol) {
  a.check_symbol(symbol);
  std::vector<char> seen(a.num_states(), 0);
  for (state_id q : states) {
    a.check_state(q);
    for (state_id r : a.successors(q, symbol)) seen[r] = 1;
  }
  std::vector<state_id> out;
  for (state_id r = 0; r < a.num_states(); ++r)
    if (seen[r]) out.push_back(r);
  return out;
}

std::vector<state_id> lift_delta_word(const nbw& a, std::span<const state_id> states,
                                      std::span<const symbol_id> word) {
  std::vector<state_id> current(states.begin(), states.end());
  for (state_id q : current) a.check_state(q);
  std::ranges::sort(current);
  current.erase(std::unique(current.begin(), current.end()), current.end());
  for (symbol_id s : word) current = lift_delta(a, current, s);
  return current;
}

namespace {

/// Iterative Tarjan over a graph with dense node indices [0, total). Stops at
/// the first nontrivial strongly connected component with an accepting node.
template <class SuccFn, class AccFn>
bool dense_accepting_cycle(std::size_t total, const std::vector<std::size_t>& roots,
                           SuccFn&& successors, AccFn&& accepting) {
  std::vector<int> order(total, -1), lowlink(total, 0);
  std::vector<char> on_stack(total, 0);
  std::vector<std::size_t> scc_stack;
  struct frame {
    std::size_t node;
    std::vector<std::size_t> succ;
    std::size_t next = 0;
    bool self_loop = false;
  };
  std::vector<frame> call_stack;
  int counter = 0;

  auto push = [&](std::size_t node) {
    order[node] = lowlink[node] = counter++;
    scc_stack.push_back(node);
    on_stack[node] = 1;
    frame f{node, {}, 0, false};
    successors(node, f.succ);
    call_stack.push_back(std::move(f));
  };

  for (std::size_t root : roots) {
    if (order[root] != -1) continue;
    push(root);
    while (!call_stack.empty()) {
      frame& top = call_stack.back();
      if (top.next < top.succ.size()) {
        std::size_t s = top.succ[top.next++];
        if (s == top.node) top.self_loop = true;
        if (order[s] == -1) {
          push(s);
        } else if (on_stack[s]) {
          lowlink[top.node] = std::min(lowlink[top.node], order[s]);
        }
        continue;
      }
      std::size_t v = top.node;
      bool self_loop = top.self_loop;
      call_stack.pop_back();
      if (!call_stack.empty())
        lowlink[call_stack.back().node] = std::min(lowlink[call_stack.back().node], lowlink[v]);
      if (lowlink[v] != order[v]) continue;
      bool nontrivial = self_loop || scc_stack.back() != v;
      bool has_accepting = false;
      std::size_t x;
      do {
        x = scc_stack.back();
        scc_stack.pop_back();
        on_stack[x] = 0;
        if (accepting(x)) has_accepting = true;
      } while (x != v);
      if (nontrivial && has_accepting) return true;
    }
  }
  return false;
}

}  // namespace

bool member(const nbw& a, const lasso_word& w) {
  w.check_alphabet(a.alphabet_size());
  const std::size_t positions = w.positions();
  std::vector<std::size_t> roots;
  for (state_id q : a.initial_states()) roots.push_back(q * positions);
  return dense_accepting_cycle(
      a.num_states() * positions, roots,
      [&](std::size_t node, std::vector<std::size_t>& out) {
        std::size_t phase = node % positions;
        std::size_t next = w.next_phase(phase);
        auto succ = a.successors(static_cast<state_id>(node / positions), w.at_phase(phase));
        out.clear();
        for (state_id r : succ) out.push_back(r * positions + next);
      },
      [&](std::size_t node) { return a.is_accepting(static_cast<state_id>(node / positions)); });
}

bool is_empty(const nbw& a) {
  auto initial = a.initial_states();
  std::vector<std::size_t> roots(initial.begin(), initial.end());
  return !dense_accepting_cycle(
      a.num_states(), roots,
      [&](std::size_t q, std::vector<std::size_t>& out) {
        out.clear();
        for (symbol_id s = 0; s < a.alphabet_size(); ++s)
          for (state_id r : a.successors(static_cast<state_id>(q), s)) out.push_back(r);
      },
      [&](std::size_t q) { return a.is_accepting(static_cast<state_id>(q)); });
}

bool intersection_empty(const nbw& a, const nbw& b) {
  if (a.alphabet() != b.alphabet()) throw input_error("product: alphabet mismatch");
  const std::size_t nb = b.num_states();
  auto index = [&](std::size_t qa, std::size_t qb, std::size_t flag) {
    return (qa * nb + qb) * 2 + flag;
  };
  std::vector<std::size_t> roots;
  for (state_id x : a.initial_states())
    for (state_id y : b.initial_states()) roots.push_back(index(x, y, 0));
  return !dense_accepting_cycle(
      a.num_states() * nb * 2, roots,
      [&](std::size_t node, std::vector<std::size_t>& out) {
        std::size_t flag = node % 2;
        auto qb = static_cast<state_id>((node / 2) % nb);
        auto qa = static_cast<state_id>((node / 2) / nb);
        if (flag == 0 && a.is_accepting(qa)) flag = 1;
        else if (flag == 1 && b.is_accepting(qb)) flag = 0;
        out.clear();
        for (symbol_id s = 0; s < a.alphabet_size(); ++s)
          for (state_id x : a.successors(qa, s))
            for (state_id y : b.successors(qb, s)) out.push_back(index(x, y, flag));
      },
      [&](std::size_t node) {
        return node % 2 == 0 && a.is_accepting(static_cast<state_id>((node / 2) / nb));
      });
}

nbw product(const nbw& a, const nbw& b) {
  explicit_view va(a), vb(b);
  return materialize(product_view(va, vb));
}

bool is_deterministic_in_limit(const nbw& a) {
  std::vector<char> seen(a.num_states(), 0);
  std::deque<state_id> queue;
  for (state_id q = 0; q < a.num_states(); ++q)
    if (a.is_accepting(q)) {
      seen[q] = 1;
      queue.push_back(q);
    }
  while (!queue.empty()) {
    state_id q = queue.front();
    queue.pop_front();
    for (symbol_id s = 0; s < a.alphabet_size(); ++s) {
      auto succ = a.successors(q, s);
      if (succ.size() > 1) return false;
      for (state_id r : succ)
        if (!seen[r]) {
          seen[r] = 1;
          queue.push_back(r);
        }
    }
  }
  return true;
}

nbw reachable_trim(const nbw& a) {
  std::vector<char> reach(a.num_states(), 0);
  std::deque<state_id> queue;
  for (state_id q : a.initial_states()) {
    reach[q] = 1;
    queue.push_back(q);
  }
  while (!queue.empty()) {
    state_id q = queue.front();
    queue.pop_front();
    for (symbol_id s = 0; s < a.alphabet_size(); ++s)
      for (state_id r : a.successors(q, s))
        if (!reach[r]) {
          reach[r] = 1;
          queue.push_back(r);
        }
  }
  nbw out(a.alphabet());
  std::vector<state_id> renumber(a.num_states(), 0);
  for (state_id q = 0; q < a.num_states(); ++q) {
    if (!reach[q]) continue;
    renumber[q] = out.add_state(a.state_name(q));
    out.set_initial(renumber[q], a.is_initial(q));
    out.set_accepting(renumber[q], a.is_accepting(q));
  }
  for (state_id q = 0; q < a.num_states(); ++q) {
    if (!reach[q]) continue;
    for (symbol_id s = 0; s < a.alphabet_size(); ++s)
      for (state_id r : a.successors(q, s)) out.add_transition(renumber[q], s, renumber[r]);
  }
  out.metadata() = a.metadata();
  return out;
}

}  // namespace buchi
