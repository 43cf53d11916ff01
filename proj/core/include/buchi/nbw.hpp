#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "buchi/state_set.hpp"

namespace buchi {

/// Raised for malformed inputs: unknown symbols, foreign states, bad lassos.
class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Explicit nondeterministic Büchi automaton.
///
/// States and symbols are interned names addressed by dense ids. The
/// transition relation may be partial; missing entries are empty successor
/// sets. Successor lists are kept sorted and duplicate free.
class nbw {
 public:
  nbw() = default;
  explicit nbw(std::vector<std::string> alphabet);

  symbol_id add_symbol(std::string name);
  state_id add_state(std::string name);
  void set_initial(state_id q, bool value = true);
  void set_accepting(state_id q, bool value = true);
  void add_transition(state_id from, symbol_id symbol, state_id to);

  std::size_t num_states() const { return state_names_.size(); }
  std::size_t alphabet_size() const { return symbol_names_.size(); }
  std::size_t num_transitions() const;

  const std::string& state_name(state_id q) const { return state_names_.at(q); }
  const std::string& symbol_name(symbol_id s) const { return symbol_names_.at(s); }
  const std::vector<std::string>& alphabet() const { return symbol_names_; }
  const std::vector<std::string>& state_names() const { return state_names_; }
  std::optional<state_id> find_state(std::string_view name) const;
  std::optional<symbol_id> find_symbol(std::string_view name) const;

  bool is_initial(state_id q) const { return initial_.at(q); }
  bool is_accepting(state_id q) const { return accepting_.at(q); }
  std::vector<state_id> initial_states() const;
  std::vector<state_id> accepting_states() const;

  std::span<const state_id> successors(state_id q, symbol_id symbol) const {
    return delta_[q][symbol];
  }

  /// Free-form key/value annotations carried through the text format.
  std::map<std::string, std::string>& metadata() { return metadata_; }
  const std::map<std::string, std::string>& metadata() const { return metadata_; }

  /// Throws input_error unless q names a state of this automaton.
  void check_state(state_id q) const;
  /// Throws input_error unless s names a symbol of this automaton.
  void check_symbol(symbol_id s) const;

  bool operator==(const nbw&) const = default;

 private:
  std::vector<std::string> symbol_names_;
  std::vector<std::string> state_names_;
  std::unordered_map<std::string, symbol_id> symbol_index_;
  std::unordered_map<std::string, state_id> state_index_;
  std::vector<bool> initial_;
  std::vector<bool> accepting_;
  std::vector<std::vector<std::vector<state_id>>> delta_;
  std::map<std::string, std::string> metadata_;
};

/// Ultimately periodic word stem . cycle^omega.
class lasso_word {
 public:
  lasso_word(std::vector<symbol_id> stem, std::vector<symbol_id> cycle);

  const std::vector<symbol_id>& stem() const { return stem_; }
  const std::vector<symbol_id>& cycle() const { return cycle_; }

  /// Number of distinct positions stem + cycle.
  std::size_t positions() const { return stem_.size() + cycle_.size(); }
  /// Position of letter i of the infinite word within stem + cycle.
  std::size_t phase(std::size_t i) const {
    return i < stem_.size() ? i : stem_.size() + (i - stem_.size()) % cycle_.size();
  }
  /// Position following position p.
  std::size_t next_phase(std::size_t p) const {
    return p + 1 < positions() ? p + 1 : stem_.size();
  }
  symbol_id at_phase(std::size_t p) const {
    return p < stem_.size() ? stem_[p] : cycle_[p - stem_.size()];
  }
  symbol_id operator[](std::size_t i) const { return at_phase(phase(i)); }

  void check_alphabet(std::size_t alphabet_size) const;

  bool operator==(const lasso_word&) const = default;
  auto operator<=>(const lasso_word&) const = default;

 private:
  std::vector<symbol_id> stem_;
  std::vector<symbol_id> cycle_;
};

/// "u=<stem> v=<cycle>" using the automaton's symbol names.
std::string to_string(const lasso_word& w, const nbw& a);

/// Parses a symbol sequence: whitespace or comma separated names, or a run of
/// single-character symbols when the alphabet allows it.
std::vector<symbol_id> parse_word(const nbw& a, std::string_view text);

/// Union of the successors of every state in `states` on `symbol`.
std::vector<state_id> lift_delta(const nbw& a, std::span<const state_id> states, symbol_id symbol);
/// lift_delta folded over a finite word; the identity on the empty word.
std::vector<state_id> lift_delta_word(const nbw& a, std::span<const state_id> states,
                                      std::span<const symbol_id> word);

/// Whether a accepts the lasso word w.
bool member(const nbw& a, const lasso_word& w);
/// Whether L(a) is empty: no reachable cycle through an accepting state.
bool is_empty(const nbw& a);
/// Two-flag Büchi intersection restricted to reachable states.
nbw product(const nbw& a, const nbw& b);
/// Same as is_empty(product(a, b)), decided without building the product.
bool intersection_empty(const nbw& a, const nbw& b);
/// Every state reachable from an accepting state has at most one successor per letter.
bool is_deterministic_in_limit(const nbw& a);
/// Drops states unreachable from the initial states, keeping relative order.
nbw reachable_trim(const nbw& a);

}  // namespace buchi
