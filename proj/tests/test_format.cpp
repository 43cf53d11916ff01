#include <random>

#include "buchi/format.hpp"
#include "buchi/verify.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace buchi;

namespace {

std::size_t error_line(const std::string& text) {
  try {
    parse_nbw(text);
  } catch (const parse_error& e) {
    return e.line();
  }
  return 0;
}

std::string error_message(const std::string& text) {
  try {
    parse_nbw(text);
  } catch (const parse_error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("running example document") {
  nbw a = testing::load("running_example.nbw");
  CHECK(a.num_states() == 5);
  CHECK(a.alphabet_size() == 2);
  CHECK(a.initial_states().size() == 5);
  std::vector<std::string> f;
  for (state_id q : a.accepting_states()) f.push_back(a.state_name(q));
  CHECK(f == std::vector<std::string>{"q", "t"});
  CHECK(a.successors(*a.find_state("t"), *a.find_symbol("b")).empty());
  CHECK(a.num_transitions() == 12);
}

TEST_CASE("document without transitions") {
  nbw a = parse_nbw("nbw\nalphabet: a\nstates: x y\ninitial: x\naccepting:\n");
  CHECK(a.num_states() == 2);
  CHECK(a.num_transitions() == 0);
  CHECK(a.accepting_states().empty());
  nbw bare = parse_nbw("nbw\nalphabet:\nstates:\n");
  CHECK(bare.num_states() == 0);
}

TEST_CASE("comments, metadata and whitespace") {
  std::string text =
      "# leading comment\n"
      "nbw\n"
      "#@ origin hand written\n"
      "alphabet:   a\tb   # trailing\n"
      "\n"
      "states: x y\n"
      "initial: x\n"
      "accepting: y\n"
      "x a -> x y\n"
      "x a -> y\n"
      "y b -> y\n";
  nbw a = parse_nbw(text);
  CHECK(a.metadata().at("origin") == "hand written");
  CHECK(a.num_transitions() == 3);
  CHECK(parse_nbw(print_nbw(a)) == a);
  CHECK(print_nbw(parse_nbw(print_nbw(a))) == print_nbw(a));
}

TEST_CASE("positioned errors") {
  CHECK(error_line("graph\n") == 1);
  CHECK(error_line("nbw\nalphabet: a\nstates: x\nx a -> z\n") == 4);
  CHECK(error_message("nbw\nalphabet: a\nstates: x\nx a -> z\n").find("'z'") != std::string::npos);
  CHECK(error_message("nbw\nalphabet: a\nstates: x\nx c -> x\n").find("'c'") != std::string::npos);
  CHECK(error_line("nbw\nalphabet: a\nstates: x x\n") == 3);
  CHECK(error_line("nbw\nalphabet: a\nstates: x\nx a x\n") == 4);
  CHECK(error_line("nbw\ninitial: x\nstates: x\n") == 2);
  CHECK(error_line("nbw\nalphabet: a\nstates: x\ninitial: y\n") == 4);
  CHECK(error_line("nbw\nalphabet: a\nalphabet: b\n") == 3);
  try {
    parse_nbw("nbw\nalphabet: a\nstates: x\nx a -> z\n");
  } catch (const parse_error& e) {
    CHECK(e.column() == 8);
  }
  CHECK_THROWS_AS(read_nbw_file("/nonexistent/file.nbw"), input_error);
}

TEST_CASE("round trip on random automata") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    random_params p;
    p.states = 1 + seed % 6;
    p.alphabet_size = 1 + seed % 3;
    p.extra_initial = seed % 2;
    p.seed = seed;
    nbw a = random_nbw(p);
    std::string text = print_nbw(a);
    nbw back = parse_nbw(text);
    CHECK(back == a);
    CHECK(print_nbw(back) == text);
  }
}
