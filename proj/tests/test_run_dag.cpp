#include <random>

#include "buchi/run_dag.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"

using namespace buchi;
using testing::states;

namespace {

struct example_fixture {
  nbw a = testing::load("running_example.nbw");
  lasso_word w = testing::lasso(a, "b", "ab");
  state_id p = *a.find_state("p"), q = *a.find_state("q"), r = *a.find_state("r"),
           s = *a.find_state("s"), t = *a.find_state("t");
};

std::vector<std::vector<state_set>> figure2(const nbw& a) {
  return {
      {states(a, {"p", "r", "s"}), states(a, {"q", "t"})},
      {states(a, {"p"}), states(a, {"q", "t"}), states(a, {"r"})},
      {states(a, {"p"}), states(a, {"q", "t"}), states(a, {"r", "s"})},
      {states(a, {"p"}), states(a, {"q"}), states(a, {"r"}), states(a, {"t"})},
      {states(a, {"p"}), states(a, {"q"}), states(a, {"r", "s"}), states(a, {"t"})},
  };
}

}  // namespace

TEST_CASE_FIXTURE(example_fixture, "dag prefix levels") {
  auto dag = build_dag_prefix(a, w, 2);
  CHECK(dag.levels[0] == states(a, {"p", "q", "r", "s", "t"}));
  CHECK(dag.levels[1] == states(a, {"p", "q", "r", "t"}));
  CHECK(build_dag_prefix(a, w, 1).levels == std::vector<state_set>{dag.levels[0]});
  CHECK_THROWS_AS(build_dag_prefix(a, w, 0), input_error);

  auto deep = build_dag_prefix(a, w, 8);
  std::vector<symbol_id> prefix;
  for (std::size_t i = 0; i < deep.depth(); ++i) {
    auto init = a.initial_states();
    auto expected = lift_delta_word(a, init, prefix);
    state_set as_set;
    for (state_id x : expected) as_set.insert(x);
    CHECK(deep.levels[i] == as_set);
    prefix.push_back(w[i]);
  }
}

TEST_CASE_FIXTURE(example_fixture, "level partitions follow the running example") {
  auto parts = level_partitions(a, w, 5);
  auto expected = figure2(a);
  REQUIRE(parts.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    CAPTURE(i);
    CHECK(parts[i].classes() == expected[i]);
  }
}

TEST_CASE_FIXTURE(example_fixture, "pruned edges keep only maximal parents") {
  auto pruned = prune_edges(build_dag_prefix(a, w, 5));
  CHECK(pruned.edges[0][q].contains(r));
  CHECK_FALSE(pruned.edges[0][r].contains(r));
  CHECK(pruned.edges[0][r].contains(t));
  CHECK(pruned.edges[1][r] == states(a, {"r", "s"}));
  CHECK(pruned.edges[1][q] == states(a, {"q"}));
  CHECK_FALSE(pruned.edges[2][q].contains(r));
  CHECK(pruned.edges[2][r].contains(r));
  auto full = build_dag_prefix(a, w, 5);
  CHECK(pruned.edges[3] == full.edges[3]);
}

TEST_CASE("one-state loop has stem 0 and period |v|") {
  nbw a({"a", "b"});
  a.add_state("x");
  a.set_initial(0);
  a.add_transition(0, 0, 0);
  a.add_transition(0, 1, 0);
  periodic_dag g(a, lasso_word({}, {0, 1, 1}));
  CHECK(g.stem() == 0);
  CHECK(g.period() == 3);
  CHECK(stabilization_level(g) == 0);
}

TEST_CASE_FIXTURE(example_fixture, "acceptance queries on the running example") {
  periodic_dag g(a, w);
  node_set finite = finite_in_pruned(g);
  for (std::size_t i = 1; i < 12; ++i) {
    std::size_t level = g.fold(i);
    if (g.states(level).contains(q)) CHECK(finite[level].contains(q));
  }
  CHECK_FALSE(finite[0].contains(q));
  CHECK_FALSE(has_accepting_path(g));
  CHECK_FALSE(g_double_prime_has_infinitely_many_f_nodes(g));
  CHECK(f_finite_level(g) == std::optional<std::size_t>(0));
  CHECK(stabilization_level(g) == 0);

  periodic_dag accepted(a, testing::lasso(a, "", "a"));
  CHECK(has_accepting_path(accepted));
  CHECK(g_double_prime_has_infinitely_many_f_nodes(accepted));
  CHECK_FALSE(f_finite_level(accepted).has_value());
  CHECK_THROWS_AS(prospective_ranking(accepted), not_rejecting);
}

TEST_CASE("no accepting states means no accepting path") {
  nbw a({"a"});
  a.add_state("x");
  a.set_initial(0);
  a.add_transition(0, 0, 0);
  periodic_dag g(a, lasso_word({}, {0}));
  CHECK_FALSE(has_accepting_path(g));
  CHECK_FALSE(g_double_prime_has_infinitely_many_f_nodes(g));
}

TEST_CASE("stabilization waits for a late class") {
  nbw a({"a"});
  state_id x = a.add_state("x"), y = a.add_state("y"), z = a.add_state("z");
  a.set_initial(x);
  a.set_accepting(z);
  a.add_transition(x, 0, x);
  a.add_transition(x, 0, y);
  a.add_transition(y, 0, z);
  a.add_transition(z, 0, z);
  periodic_dag g(a, lasso_word({}, {0}));
  CHECK(stabilization_level(g) == 2);
}

TEST_CASE_FIXTURE(example_fixture, "prospective ranks by column") {
  periodic_dag g(a, w);
  auto rank = prospective_ranking(g);
  std::map<state_id, int> column{{p, 3}, {q, 2}, {r, 1}, {s, 0}, {t, 0}};
  for (std::size_t level = 0; level < g.num_levels(); ++level)
    for (state_id x : g.states(level)) {
      CAPTURE(level);
      CHECK(rank[level][x] == column[x]);
    }
  auto check = check_ranking(g, rank);
  CHECK(check.is_ranking);
  CHECK(check.is_odd);
  CHECK(check.bound <= a.num_states() * 2);
}

TEST_CASE("prospective ranking of an empty DAG is empty") {
  nbw a({"a", "b"});
  a.add_state("x");
  a.set_initial(0);
  a.add_transition(0, 0, 0);
  periodic_dag g(a, lasso_word({1}, {0}));
  auto rank = prospective_ranking(g);
  for (std::size_t level = 1; level < g.num_levels(); ++level) CHECK(g.states(level).empty());
  CHECK(rank[0][0] == 0);
}

TEST_CASE_FIXTURE(example_fixture, "retrospective ranks at k = 0") {
  periodic_dag g(a, w, 0);
  CHECK(is_legal(g));
  auto labels = lambda_labels(g);
  for (std::size_t i = 1; i < 8; ++i) {
    std::size_t level = g.fold(i);
    for (state_id x : g.states(level)) CHECK(labels[level][x] == (x != q && x != t));
  }
  auto rank = retrospective_ranking(g);
  const int bottom = -1;
  std::vector<std::map<state_id, int>> expected{
      {{p, 6}, {q, 6}, {r, 6}, {s, 6}, {t, 6}},
      {{p, 3}, {q, 2}, {r, 1}, {s, bottom}, {t, 2}},
      {{p, 3}, {q, 2}, {r, 1}, {s, 1}, {t, 2}},
      {{p, 3}, {q, 2}, {r, 1}, {s, bottom}, {t, 0}},
      {{p, 3}, {q, 2}, {r, 1}, {s, 1}, {t, 0}},
  };
  for (std::size_t i = 0; i < expected.size(); ++i)
    for (auto [x, value] : expected[i]) {
      CAPTURE(i);
      CHECK(rank[g.fold(i)][x] == value);
    }
  auto check = check_ranking(g, rank);
  CHECK(check.is_ranking);
  CHECK(check.is_odd);
}

TEST_CASE("constant zero ranking is a ranking but not odd on an infinite path") {
  nbw a({"a"});
  a.add_state("x");
  a.set_initial(0);
  a.set_accepting(0);
  a.add_transition(0, 0, 0);
  periodic_dag g(a, lasso_word({}, {0}));
  node_ranking zero(g.num_levels(), std::vector<int>(1, 0));
  auto check = check_ranking(g, zero);
  CHECK(check.is_ranking);
  CHECK_FALSE(check.is_odd);
  node_ranking one(g.num_levels(), std::vector<int>(1, 1));
  CHECK_FALSE(check_ranking(g, one).is_ranking);
}

TEST_CASE_FIXTURE(example_fixture, "reduced split tree on the running example") {
  auto tree = reduced_split_tree(a, w, 5);
  auto expected = figure2(a);
  for (std::size_t i = 0; i < 5; ++i) CHECK(tree[i] == expected[i]);
  CHECK(reduced_split_tree(a, w, 1).size() == 1);
}

TEST_CASE("run DAG properties on random instances") {
  std::mt19937_64 rng(7);
  for (int sample = 0; sample < 60; ++sample) {
    std::size_t n = 1 + sample % 4;
    nbw a = testing::random_automaton(rng, n);
    lasso_word w = testing::random_lasso(rng, 2);
    CAPTURE(sample);

    auto dag = build_dag_prefix(a, w, 6);
    auto profiles = oracle::explicit_profiles(dag);
    auto parts = level_partitions(a, w, 6);
    for (std::size_t i = 0; i < 6; ++i) CHECK(parts[i].classes() == oracle::profile_classes(profiles[i]));
    auto pruned = prune_edges(dag);
    for (std::size_t i = 0; i + 1 < 6; ++i)
      for (state_id x : dag.levels[i])
        for (state_id y : pruned.edges[i][x])
          CHECK(profiles[i + 1][y] == profiles[i][x] + (a.is_accepting(y) ? '1' : '0'));

    auto tree = reduced_split_tree(a, w, 8);
    auto parts8 = level_partitions(a, w, 8);
    for (std::size_t i = 0; i < 8; ++i) CHECK(tree[i] == parts8[i].classes());

    periodic_dag g(a, w);
    std::size_t horizon = oracle::quotient_size(g) + 1;
    auto unrolled = prune_edges(build_dag_prefix(a, w, g.num_levels() + horizon + 1));
    node_set finite = finite_in_pruned(g);
    for (std::size_t level = 0; level < g.num_levels(); ++level)
      for (state_id x : g.states(level))
        CHECK(finite[level].contains(x) == !oracle::survives(unrolled, level, x, horizon));

    bool accepted = member(a, w);
    CHECK(has_accepting_path(g) == accepted);
    CHECK(g_double_prime_has_infinitely_many_f_nodes(g) == accepted);
    auto k = f_finite_level(g);
    CHECK(k.has_value() == !accepted);
    CHECK_NOTHROW(stabilization_level(g));
    if (accepted) continue;

    auto prospective = prospective_ranking(g);
    auto pc = check_ranking(g, prospective);
    CHECK(pc.is_odd);
    CHECK(pc.bound <= a.num_states() * 2);

    for (std::size_t kk = 0; kk < g.num_levels() + 2; ++kk) {
      periodic_dag gk(a, w, kk);
      bool legal = is_legal(gk);
      CHECK(legal == (kk >= *k));
      if (legal) CHECK(check_ranking(gk, retrospective_ranking(gk)).is_odd);
    }
  }
}
