#include <set>

#include "buchi/fault.hpp"
#include "buchi/verify.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"

using namespace buchi;

TEST_CASE("lasso enumeration") {
  CHECK(enumerate_lassos(2, 0, 1).size() == 2);
  // a, b, ab, ba; aa and bb are powers of shorter cycles.
  CHECK(enumerate_lassos(2, 0, 2).size() == 4);
  CHECK(enumerate_lassos(1, 3, 1).size() == 4);
  CHECK(enumerate_lassos(2, 1, 1).size() == 6);
  CHECK(enumerate_lassos(2, 3, 4).size() == 330);
  for (const auto& w : enumerate_lassos(2, 2, 4)) {
    const auto& v = w.cycle();
    for (std::size_t p = 1; p < v.size(); ++p) {
      if (v.size() % p != 0) continue;
      bool periodic = true;
      for (std::size_t i = p; i < v.size(); ++i) periodic = periodic && v[i] == v[i - p];
      CHECK_FALSE(periodic);
    }
  }
  auto all = enumerate_lassos(2, 2, 3);
  std::set<std::pair<std::vector<symbol_id>, std::vector<symbol_id>>> distinct;
  for (const auto& w : all) distinct.emplace(w.stem(), w.cycle());
  CHECK(distinct.size() == all.size());
}

TEST_CASE("random automata") {
  nbw one = random_nbw({1, 2, 1.0, 1.0, 0, 7});
  CHECK(one.num_states() == 1);
  CHECK(one.is_accepting(0));
  CHECK(one.is_initial(0));
  REQUIRE(one.successors(0, 0).size() == 1);
  CHECK(one.successors(0, 0)[0] == 0);

  random_params p{3, 2, 1.5, 0.5, 1, 42};
  nbw a = random_nbw(p);
  CHECK(a == random_nbw(p));
  for (symbol_id s = 0; s < 2; ++s) {
    std::size_t count = 0;
    for (state_id q = 0; q < 3; ++q) count += a.successors(q, s).size();
    CHECK(count == 5);
  }
  std::size_t accepting = 0, initial = 0;
  for (state_id q = 0; q < 3; ++q) {
    accepting += a.is_accepting(q);
    initial += a.is_initial(q);
  }
  CHECK(accepting == 2);
  CHECK(initial == 2);
  CHECK(a.is_initial(0));
  CHECK(a.metadata().at("generator") == "tabakov-vardi");
  CHECK(a.metadata().at("seed") == "42");

  p.seed = 43;
  bool differs = false;
  for (std::uint64_t seed = 43; seed < 53 && !differs; ++seed) {
    p.seed = seed;
    differs = !(random_nbw(p) == a);
  }
  CHECK(differs);

  nbw dense = random_nbw({2, 2, 9.0, 0.0, 0, 1});
  for (symbol_id s = 0; s < 2; ++s) CHECK(dense.successors(0, s).size() == 2);
}

TEST_CASE("preordered subset counts") {
  const std::uint64_t fub[] = {1, 1, 3, 13, 75, 541};
  const std::uint64_t pre[] = {1, 2, 6, 26, 150, 1082};
  for (std::size_t n = 0; n <= 5; ++n) {
    CHECK(fubini(n) == fub[n]);
    CHECK(preordered_subset_count(n) == pre[n]);
    CHECK(oracle::count_preordered_subsets(n) == pre[n]);
  }
}

TEST_CASE("check_complement on the running example") {
  nbw a = testing::load("running_example.nbw");
  sweep_config config;
  config.max_stem = 2;
  config.max_cycle = 3;
  for (method m : {method::slice, method::retro, method::schewe}) {
    method_report r = check_complement(a, m, config);
    CAPTURE(method_name(m));
    CHECK(r.passed);
    CHECK(r.disjoint);
    CHECK_FALSE(r.failure);
    CHECK(r.lassos_checked == enumerate_lassos(2, 2, 3).size());
    CHECK(r.deterministic_in_limit.value_or(true));
  }
  method_report retro = check_complement(a, method::retro, config);
  CHECK(retro.states == 20);
  CHECK(*retro.max_branching <= 2);
  CHECK(*retro.max_stage2_branching <= 1);
}

TEST_CASE("check_complement reports budget overruns") {
  sweep_config config;
  config.budget = 10;
  method_report r = check_complement(testing::load("running_example.nbw"), method::rank, config);
  CHECK_FALSE(r.passed);
  CHECK(r.error);
}

TEST_CASE("an injected fault is caught with a counterexample") {
  if (!fault_injection_enabled()) return;
  nbw a = testing::load("running_example.nbw");
  fault_guard guard(fault::retro_accept_all_stage2);
  method_report r = check_complement(a, method::retro, {});
  CHECK_FALSE(r.passed);
  REQUIRE(r.failure);
  CHECK(r.failure->in_complement);
  CHECK(r.failure->in_automaton == oracle::member(a, r.failure->word));
}

TEST_CASE("cross-check and reports") {
  nbw sink({"a", "b"});
  sink.add_state("s");
  sink.set_initial(0);
  sink.add_transition(0, 0, 0);
  sink.add_transition(0, 1, 0);
  sweep_config config;
  cross_check_report cc = cross_check_methods(sink, config);
  CHECK(cc.agree);
  CHECK(cc.lassos_checked == enumerate_lassos(2, 3, 4).size());

  std::vector<method> methods(all_methods.begin(), all_methods.end());
  verification_report r = verify_automaton(sink, "sink", methods, config);
  CHECK(r.passed());
  std::string kv = to_key_value(r, sink);
  CHECK(kv.rfind("buchi-report 1\n", 0) == 0);
  CHECK(kv.find("result=pass") != std::string::npos);
  CHECK(kv.find("method.retro.passed=true") != std::string::npos);
  CHECK(kv == to_key_value(verify_automaton(sink, "sink", methods, config), sink));
  CHECK(to_text(r, sink) == to_text(verify_automaton(sink, "sink", methods, config), sink));
}

TEST_CASE("size statistics") {
  size_report s = size_stats(testing::load("running_example.nbw"));
  CHECK(s.automaton_states == 5);
  CHECK(s.preordered_subsets == 1082);
  CHECK(s.retro_stage1_states == 5);
  CHECK(s.retro_stage1_states <= s.preordered_subsets);
}
