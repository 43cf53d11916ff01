#include <map>
#include <random>
#include <set>

#include "buchi/level_ranking.hpp"
#include "buchi/partition.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace buchi;

namespace {

struct example_dense {
  nbw source = testing::load("running_example.nbw");
  dense_automaton a{source};
  symbol_id sa = *source.find_symbol("a"), sb = *source.find_symbol("b");

  state_set set(std::initializer_list<const char*> names) const { return testing::states(source, names); }
  ordered_partition part(std::vector<state_set> classes) const { return ordered_partition(classes); }
  level_ranking ranks(const std::map<std::string, int>& values) const {
    level_ranking f(a.num_states());
    for (const auto& [name, r] : values) f.set(*source.find_state(name), r);
    return f;
  }
};

level_ranking plain(std::initializer_list<int> values) {
  level_ranking f(values.size());
  state_id q = 0;
  for (int v : values) f.set(q++, v);
  return f;
}

}  // namespace

TEST_CASE_FIXTURE(example_dense, "restricted successors on level 1") {
  auto level1 = part({set({"p"}), set({"q", "t"}), set({"r"})});
  CHECK(restricted_successors(a, level1, *source.find_state("q"), sa) == set({"q"}));
  CHECK(restricted_successors(a, level1, *source.find_state("r"), sa) == set({"r", "s"}));
  CHECK(restricted_successors(a, level1, *source.find_state("p"), sa) == set({"p"}));
  auto level3 = part({set({"p"}), set({"q"}), set({"r"}), set({"t"})});
  CHECK(restricted_successors(a, level3, *source.find_state("t"), sb).empty());
}

TEST_CASE_FIXTURE(example_dense, "successor preorders") {
  auto level0 = initial_partition(a, a.initial());
  CHECK(level0 == part({set({"p", "r", "s"}), set({"q", "t"})}));
  CHECK(render(a, level0) == "[{p,r,s}|{q,t}]");
  auto level1 = sigma_successor(a, level0, sb);
  CHECK(level1 == part({set({"p"}), set({"q", "t"}), set({"r"})}));
  CHECK(sigma_successor(a, level1, sa) == part({set({"p"}), set({"q", "t"}), set({"r", "s"})}));
  CHECK(sigma_successor(a, ordered_partition(), sa).empty());
  for (const auto& c : level1.classes())
    CHECK((c.subset_of(a.accepting()) || !c.intersects(a.accepting())));
}

TEST_CASE_FIXTURE(example_dense, "torank") {
  auto level1 = part({set({"p"}), set({"q", "t"}), set({"r"})});
  CHECK(to_rank(a, level1) == ranks({{"p", 3}, {"q", 2}, {"t", 2}, {"r", 1}}));
  CHECK(to_rank(a, ordered_partition()) == level_ranking(a.num_states()));
  CHECK(to_rank(a, part({set({"q", "t"})})) == ranks({{"q", 0}, {"t", 0}}));
  CHECK(is_tight(to_rank(a, level1)));
  CHECK(render(a, to_rank(a, level1)) == "[p:3,q:2,r:1,s:⊥,t:2]");
}

TEST_CASE("tightness") {
  CHECK(is_tight(plain({3, 2, 1, 0})));
  CHECK(is_tight(plain({bottom, bottom})));
  CHECK_FALSE(is_tight(plain({0, 3})));
  CHECK_FALSE(is_tight(plain({0, 2})));
  CHECK(is_tight(plain({1})));
}

TEST_CASE("tighten keeps parity and fixes tight rankings") {
  CHECK(tighten(plain({0, 1, 4, 5})) == plain({0, 1, 2, 3}));
  CHECK(tighten(plain({3, 2, 1, 0})) == plain({3, 2, 1, 0}));
  CHECK(tighten(plain({bottom, bottom})) == plain({bottom, bottom}));
  CHECK(tighten(plain({6, bottom, 4})) == plain({0, bottom, 0}));

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> rank(-1, 9);
  for (int sample = 0; sample < 500; ++sample) {
    level_ranking f(5);
    for (state_id q = 0; q < 5; ++q) f.set(q, rank(rng));
    level_ranking t = tighten(f);
    CHECK(is_tight(t));
    for (state_id q = 0; q < 5; ++q) {
      CHECK((t[q] == bottom) == (f[q] == bottom));
      if (f[q] == bottom) continue;
      CHECK(t[q] % 2 == f[q] % 2);
      // gamma: odd ranks of f strictly below f(q)
      std::set<int> below;
      for (state_id r = 0; r < 5; ++r)
        if (f[r] != bottom && f[r] % 2 == 1 && f[r] < f[q]) below.insert(f[r]);
      CHECK(t[q] == 2 * static_cast<int>(below.size()) + f[q] % 2);
      for (state_id r = 0; r < 5; ++r)
        if (f[r] != bottom && f[r] <= f[q]) CHECK(t[r] <= t[q]);
    }
    if (is_tight(f)) CHECK(t == f);
  }
}

TEST_CASE_FIXTURE(example_dense, "level-ranking successors along the running example") {
  auto level1 = ranks({{"p", 3}, {"q", 2}, {"r", 1}, {"t", 2}});
  auto level2 = sigma_successor(a, level1, sa);
  CHECK(level2 == ranks({{"p", 3}, {"q", 2}, {"r", 1}, {"s", 1}, {"t", 2}}));
  auto level3 = sigma_successor(a, level2, sb);
  CHECK(level3 == ranks({{"p", 3}, {"q", 2}, {"r", 1}, {"t", 0}}));
  CHECK(sigma_successor(a, level_ranking(a.num_states()), sa) == level_ranking(a.num_states()));
  CHECK(sigma_successor(a, ranks({{"t", 0}}), sb) == level_ranking(a.num_states()));
}

TEST_CASE_FIXTURE(example_dense, "follows under") {
  CHECK(follows_under(a, level_ranking(a.num_states()), ranks({{"p", 5}}), sa));
  auto f = ranks({{"p", 3}, {"q", 2}, {"r", 1}, {"t", 0}});
  auto g = ranks({{"p", 3}, {"q", 2}, {"r", 1}, {"s", 1}, {"t", 0}});
  CHECK(follows_under(a, f, g, sa));
  CHECK(follows_under(a, f, ranks({{"p", 3}, {"q", 2}, {"r", 1}, {"t", 0}}), sb));
  CHECK_FALSE(follows_under(a, ranks({{"q", 2}}), ranks({{"r", 3}}), sb));
  CHECK_FALSE(follows_under(a, ranks({{"q", 2}}), ranks({{"q", 2}}), sb));
}

TEST_CASE_FIXTURE(example_dense, "level ranking predicate") {
  CHECK(is_level_ranking(a, ranks({{"p", 3}, {"q", 2}}), 6));
  CHECK_FALSE(is_level_ranking(a, ranks({{"q", 1}}), 6));
  CHECK_FALSE(is_level_ranking(a, ranks({{"p", 7}}), 6));
}

TEST_CASE_FIXTURE(example_dense, "ranking enumeration") {
  std::vector<int> upper(a.num_states(), 3);
  std::vector<level_ranking> seen;
  state_set support = set({"p", "q"});
  for_each_ranking(a, support, upper, [&](const level_ranking& f) { seen.push_back(f); });
  // p in 0..3, q in {0, 2}
  CHECK(seen.size() == 8);
  CHECK(seen.front() == ranks({{"p", 0}, {"q", 0}}));
  CHECK(seen[1] == ranks({{"p", 0}, {"q", 2}}));
  CHECK(seen.back() == ranks({{"p", 3}, {"q", 2}}));
  for (const auto& f : seen) {
    CHECK(f.support() == support);
    CHECK(is_level_ranking(a, f, 3));
  }
  std::size_t count = 0;
  for_each_ranking(a, state_set(), upper, [&](const level_ranking&) { ++count; });
  CHECK(count == 1);
}
