#pragma once

#include <string>
#include <vector>

#include "buchi/format.hpp"
#include "buchi/nbw.hpp"

namespace testing {

inline buchi::nbw load(const std::string& name) {
  return buchi::read_nbw_file(std::string(BUCHI_DATA_DIR) + "/" + name);
}

inline buchi::lasso_word lasso(const buchi::nbw& a, const std::string& stem,
                               const std::string& cycle) {
  return buchi::lasso_word(buchi::parse_word(a, stem), buchi::parse_word(a, cycle));
}

inline buchi::state_set states(const buchi::nbw& a, std::initializer_list<const char*> names) {
  buchi::state_set out;
  for (const char* n : names) out.insert(*a.find_state(n));
  return out;
}

}  // namespace testing

#include <random>

namespace testing {

/// Small random automaton for property tests, independent of the library generator.
inline buchi::nbw random_automaton(std::mt19937_64& rng, std::size_t n, std::size_t letters = 2) {
  std::vector<std::string> alphabet;
  for (std::size_t i = 0; i < letters; ++i) alphabet.push_back(std::string(1, char('a' + i)));
  buchi::nbw a(alphabet);
  for (std::size_t q = 0; q < n; ++q) a.add_state("s" + std::to_string(q));
  std::bernoulli_distribution edge(0.35), acc(0.4), init(0.3);
  for (buchi::state_id q = 0; q < n; ++q) {
    if (q == 0 || init(rng)) a.set_initial(q);
    if (acc(rng)) a.set_accepting(q);
    for (buchi::symbol_id s = 0; s < letters; ++s)
      for (buchi::state_id r = 0; r < n; ++r)
        if (edge(rng)) a.add_transition(q, s, r);
  }
  return a;
}

inline buchi::lasso_word random_lasso(std::mt19937_64& rng, std::size_t letters,
                                      std::size_t max_stem = 3, std::size_t max_cycle = 4) {
  std::uniform_int_distribution<std::size_t> stem_len(0, max_stem), cycle_len(1, max_cycle);
  std::uniform_int_distribution<buchi::symbol_id> letter(0, static_cast<buchi::symbol_id>(letters - 1));
  std::vector<buchi::symbol_id> u(stem_len(rng)), v(cycle_len(rng));
  for (auto& x : u) x = letter(rng);
  for (auto& x : v) x = letter(rng);
  return buchi::lasso_word(u, v);
}

}  // namespace testing
