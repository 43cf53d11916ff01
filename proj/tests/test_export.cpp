#include <fstream>
#include <sstream>

#include "buchi/dot.hpp"
#include "buchi/run_dag.hpp"
#include "buchi/smv.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace buchi;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("SMV model of the two-state example") {
  nbw a = testing::load("two_state.nbw");
  CHECK(to_smv(a) == slurp(std::string(BUCHI_GOLDEN_DIR) + "/two_state.smv"));
}

TEST_CASE("SMV model structure") {
  nbw a = testing::load("running_example.nbw");
  std::string smv = to_smv(a);
  CHECK(smv.rfind("typedef STATE 0..4;", 0) == 0);
  CHECK(smv.find("rank: array STATE of 0..7;") != std::string::npos);
  CHECK(smv.find("FAIRNESS subset=[0,0,0,0,0];") != std::string::npos);
  CHECK(count(smv, "]) := case {") == 5);

  nbw no_f = a;
  for (state_id q = 0; q < no_f.num_states(); ++q) no_f.set_accepting(q, false);
  std::string plain = to_smv(no_f);
  CHECK(plain.find("of 0..11;") != std::string::npos);
  CHECK(plain.find("accepting") == std::string::npos);

  nbw empty({"a"});
  CHECK_THROWS_AS(to_smv(empty), input_error);
}

TEST_CASE("DOT annotations") {
  CHECK(parse_annotation("none").which == dag_annotation::kind::none);
  CHECK(parse_annotation("profiles").which == dag_annotation::kind::profiles);
  dag_annotation r = parse_annotation("retro:3");
  CHECK(r.which == dag_annotation::kind::retro);
  CHECK(r.k == 3);
  CHECK(parse_annotation("lambda:0").which == dag_annotation::kind::lambda);
  CHECK_THROWS_AS(parse_annotation("retro"), input_error);
  CHECK_THROWS_AS(parse_annotation("retro:x"), input_error);
  CHECK_THROWS_AS(parse_annotation("ranks"), input_error);
}

TEST_CASE("DOT rendering of the running example") {
  nbw a = testing::load("running_example.nbw");
  lasso_word w = testing::lasso(a, "b", "ab");

  std::string one = dag_to_dot(a, w, 1);
  CHECK(one.rfind("digraph", 0) == 0);
  CHECK(count(one, "->") == 0);
  CHECK(count(one, "@0") == 5);

  std::string pro = dag_to_dot(a, w, 3, parse_annotation("prospective"));
  CHECK(pro.find("\"p@0\\nr=3\"") != std::string::npos);
  CHECK(pro.find("\"s@0\\nr=0\"") != std::string::npos);
  CHECK(pro.find("style=dashed") != std::string::npos);

  std::string retro = dag_to_dot(a, w, 3, parse_annotation("retro:0"));
  CHECK(retro.find("\"t@1\\nr=2\"") != std::string::npos);

  CHECK_THROWS_AS(dag_to_dot(a, w, 0), input_error);
  CHECK_THROWS_AS(dag_to_dot(a, testing::lasso(a, "", "a"), 2, parse_annotation("prospective")),
                  not_rejecting);
}
