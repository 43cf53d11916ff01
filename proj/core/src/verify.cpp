#include "buchi/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "buchi/search.hpp"

namespace buchi {

namespace {

std::size_t scaled(std::size_t n, double density, std::size_t cap) {
  if (density <= 0) return 0;
  auto k = static_cast<std::size_t>(std::ceil(static_cast<double>(n) * density - 1e-9));
  return std::min(k, cap);
}

std::string format_double(double x) {
  std::ostringstream out;
  out << x;
  return out.str();
}

bool is_primitive(const std::vector<symbol_id>& v) {
  for (std::size_t d = 1; d < v.size(); ++d) {
    if (v.size() % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < v.size() && repeats; ++i) repeats = v[i] == v[i - d];
    if (repeats) return false;
  }
  return true;
}

std::vector<std::vector<symbol_id>> words_of_length(std::size_t alphabet_size, std::size_t len) {
  std::vector<std::vector<symbol_id>> out;
  std::vector<symbol_id> w(len, 0);
  while (true) {
    out.push_back(w);
    std::size_t i = len;
    while (i > 0) {
      if (++w[i - 1] < alphabet_size) break;
      w[i - 1] = 0;
      --i;
    }
    if (i == 0) return out;
  }
}

std::size_t max_branching(const nbw& c, bool stage2_only) {
  std::size_t best = 0;
  for (state_id q = 0; q < c.num_states(); ++q) {
    if (stage2_only && !c.state_name(q).starts_with("S2:")) continue;
    for (symbol_id s = 0; s < c.alphabet_size(); ++s) best = std::max(best, c.successors(q, s).size());
  }
  return best;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }
const char* true_false(bool b) { return b ? "true" : "false"; }

}  // namespace

nbw random_nbw(const random_params& p) {
  if (p.states == 0) throw input_error("random automaton needs at least one state");
  if (p.alphabet_size == 0 || p.alphabet_size > 26)
    throw input_error("alphabet size must be between 1 and 26");
  std::mt19937_64 rng(p.seed);
  std::vector<std::string> alphabet;
  for (std::size_t i = 0; i < p.alphabet_size; ++i) alphabet.emplace_back(1, static_cast<char>('a' + i));
  nbw a(alphabet);
  for (std::size_t q = 0; q < p.states; ++q) a.add_state("q" + std::to_string(q));

  std::vector<std::pair<state_id, state_id>> pairs;
  for (state_id x = 0; x < p.states; ++x)
    for (state_id y = 0; y < p.states; ++y) pairs.emplace_back(x, y);
  std::size_t per_letter = scaled(p.states, p.transition_density, pairs.size());
  for (symbol_id s = 0; s < p.alphabet_size; ++s) {
    std::shuffle(pairs.begin(), pairs.end(), rng);
    std::vector<std::pair<state_id, state_id>> chosen(pairs.begin(), pairs.begin() + static_cast<std::ptrdiff_t>(per_letter));
    std::sort(chosen.begin(), chosen.end());
    for (auto [x, y] : chosen) a.add_transition(x, s, y);
  }

  std::vector<state_id> order(p.states);
  std::iota(order.begin(), order.end(), state_id{0});
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t i = 0; i < scaled(p.states, p.acceptance_density, p.states); ++i)
    a.set_accepting(order[i]);

  a.set_initial(0);
  std::vector<state_id> others(p.states - 1);
  std::iota(others.begin(), others.end(), state_id{1});
  std::shuffle(others.begin(), others.end(), rng);
  for (std::size_t i = 0; i < std::min(p.extra_initial, others.size()); ++i) a.set_initial(others[i]);

  auto& meta = a.metadata();
  meta["generator"] = "tabakov-vardi";
  meta["states"] = std::to_string(p.states);
  meta["alphabet-size"] = std::to_string(p.alphabet_size);
  meta["transition-density"] = format_double(p.transition_density);
  meta["acceptance-density"] = format_double(p.acceptance_density);
  meta["extra-initial"] = std::to_string(p.extra_initial);
  meta["seed"] = std::to_string(p.seed);
  return a;
}

std::vector<lasso_word> enumerate_lassos(std::size_t alphabet_size, std::size_t max_stem,
                                         std::size_t max_cycle) {
  if (max_cycle == 0) throw input_error("maximum cycle length must be at least 1");
  if (alphabet_size == 0) return {};
  std::vector<std::vector<symbol_id>> cycles;
  for (std::size_t len = 1; len <= max_cycle; ++len)
    for (auto& v : words_of_length(alphabet_size, len))
      if (is_primitive(v)) cycles.push_back(std::move(v));
  std::vector<lasso_word> out;
  for (std::size_t len = 0; len <= max_stem; ++len)
    for (auto& u : words_of_length(alphabet_size, len))
      for (const auto& v : cycles) out.emplace_back(u, v);
  return out;
}

method_report check_complement(const nbw& a, method m, const sweep_config& config) {
  auto start = std::chrono::steady_clock::now();
  method_report r;
  r.which = m;
  try {
    nbw c = complement(a, m, {config.bound, config.budget});
    r.states = c.num_states();
    r.transitions = c.num_transitions();
    for (const auto& w : enumerate_lassos(a.alphabet_size(), config.max_stem, config.max_cycle)) {
      ++r.lassos_checked;
      bool in_a = member(a, w);
      bool in_c = member(c, w);
      if (in_a == in_c) {
        r.failure = counterexample{w, in_a, in_c};
        break;
      }
    }
    r.disjoint = intersection_empty(a, c);
    if (m == method::retro || m == method::schewe || m == method::symbolic) {
      r.deterministic_in_limit = is_deterministic_in_limit(c);
      r.structure_ok = *r.deterministic_in_limit;
    }
    if (m == method::retro) {
      r.max_branching = max_branching(c, false);
      r.max_stage2_branching = max_branching(c, true);
      r.structure_ok = r.structure_ok && *r.max_branching <= 2 && *r.max_stage2_branching <= 1;
    }
    r.passed = !r.failure && r.disjoint && r.structure_ok;
  } catch (const budget_exceeded& e) {
    r.error = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

cross_check_report cross_check_methods(const nbw& a, const sweep_config& config) {
  cross_check_report out;
  std::vector<std::pair<method, nbw>> built;
  for (method m : all_methods) {
    try {
      built.emplace_back(m, complement(a, m, {config.bound, config.budget}));
    } catch (const budget_exceeded&) {
    }
  }
  for (const auto& w : enumerate_lassos(a.alphabet_size(), config.max_stem, config.max_cycle)) {
    ++out.lassos_checked;
    if (built.empty()) break;
    bool first = member(built.front().second, w);
    for (std::size_t i = 1; i < built.size(); ++i) {
      bool verdict = member(built[i].second, w);
      if (verdict != first) {
        out.agree = false;
        out.failure = disagreement{w, built.front().first, first, built[i].first, verdict};
        return out;
      }
    }
  }
  return out;
}

std::uint64_t fubini(std::size_t k) {
  // a(k) = sum_{j=1..k} C(k, j) a(k - j), a(0) = 1
  std::vector<std::uint64_t> a(k + 1, 0);
  a[0] = 1;
  for (std::size_t n = 1; n <= k; ++n) {
    std::uint64_t binom = 1;
    for (std::size_t j = 1; j <= n; ++j) {
      binom = binom * (n - j + 1) / j;
      a[n] += binom * a[n - j];
    }
  }
  return a[k];
}

std::uint64_t preordered_subset_count(std::size_t n) {
  std::uint64_t total = 0, binom = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    total += binom * fubini(k);
    binom = binom * (n - k) / (k + 1);
  }
  return total;
}

size_report size_stats(const nbw& a, const sweep_config& config) {
  size_report out;
  out.automaton_states = a.num_states();
  out.preordered_subsets = preordered_subset_count(a.num_states());
  for (method m : all_methods) {
    try {
      nbw c = complement(a, m, {config.bound, config.budget});
      out.counts.push_back({m, {c.num_states(), c.num_transitions()}});
      if (m == method::retro)
        for (const auto& name : c.state_names())
          if (name.starts_with("S1:")) ++out.retro_stage1_states;
    } catch (const budget_exceeded& e) {
      out.errors.emplace_back(m, e.what());
    }
  }
  return out;
}

bool verification_report::passed() const {
  bool ok = std::ranges::all_of(methods, [](const method_report& m) { return m.passed; });
  return ok && (!cross_check || cross_check->agree);
}

verification_report verify_automaton(const nbw& a, const std::string& label,
                                     const std::vector<method>& methods,
                                     const sweep_config& config) {
  verification_report r;
  r.automaton = label;
  r.config = config;
  for (method m : methods) r.methods.push_back(check_complement(a, m, config));
  if (methods.size() > 1) r.cross_check = cross_check_methods(a, config);
  return r;
}

std::string to_text(const verification_report& r, const nbw& a, bool timing) {
  std::ostringstream out;
  std::size_t words =
      enumerate_lassos(a.alphabet_size(), r.config.max_stem, r.config.max_cycle).size();
  out << "automaton: " << r.automaton << " (" << a.num_states() << " states, "
      << a.alphabet_size() << " symbols)\n";
  out << "lassos: |u|<=" << r.config.max_stem << " |v|<=" << r.config.max_cycle << " (" << words
      << " words)\n";
  for (const auto& m : r.methods) {
    out << "method " << method_name(m.which) << ": " << (m.passed ? "PASS" : "FAIL");
    if (m.error) {
      out << " error: " << *m.error << '\n';
      continue;
    }
    out << " states=" << m.states << " transitions=" << m.transitions
        << " disjoint=" << yes_no(m.disjoint);
    if (m.deterministic_in_limit) out << " det-in-limit=" << yes_no(*m.deterministic_in_limit);
    if (m.max_branching) out << " branching=" << *m.max_branching;
    if (m.max_stage2_branching) out << " stage2-branching=" << *m.max_stage2_branching;
    if (timing) out << " seconds=" << m.seconds;
    out << '\n';
    if (m.failure)
      out << "  counterexample " << to_string(m.failure->word, a)
          << " automaton=" << (m.failure->in_automaton ? "accepts" : "rejects")
          << " complement=" << (m.failure->in_complement ? "accepts" : "rejects") << '\n';
  }
  if (r.cross_check) {
    out << "cross-check: " << (r.cross_check->agree ? "agree" : "DISAGREE") << '\n';
    if (auto& f = r.cross_check->failure)
      out << "  " << to_string(f->word, a) << ' ' << method_name(f->first) << '='
          << (f->first_verdict ? "accepts" : "rejects") << ' ' << method_name(f->second) << '='
          << (f->second_verdict ? "accepts" : "rejects") << '\n';
  }
  out << "note: universality of the complement is not decided; evidence is agreement on the "
         "enumerated lassos plus exact disjointness\n";
  out << "result: " << (r.passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

std::string to_key_value(const verification_report& r, const nbw& a, bool timing) {
  std::ostringstream out;
  out << "buchi-report 1\n";
  out << "automaton=" << r.automaton << '\n';
  out << "automaton.states=" << a.num_states() << '\n';
  out << "automaton.symbols=" << a.alphabet_size() << '\n';
  out << "config.max_stem=" << r.config.max_stem << '\n';
  out << "config.max_cycle=" << r.config.max_cycle << '\n';
  out << "config.budget=" << r.config.budget << '\n';
  if (r.config.bound) out << "config.bound=" << *r.config.bound << '\n';
  for (const auto& m : r.methods) {
    std::string key = "method." + std::string(method_name(m.which)) + ".";
    out << key << "passed=" << true_false(m.passed) << '\n';
    if (m.error) {
      out << key << "error=" << *m.error << '\n';
      continue;
    }
    out << key << "states=" << m.states << '\n';
    out << key << "transitions=" << m.transitions << '\n';
    out << key << "lassos=" << m.lassos_checked << '\n';
    out << key << "disjoint=" << true_false(m.disjoint) << '\n';
    if (m.deterministic_in_limit)
      out << key << "det_in_limit=" << true_false(*m.deterministic_in_limit) << '\n';
    if (m.max_branching) out << key << "branching=" << *m.max_branching << '\n';
    if (m.max_stage2_branching) out << key << "stage2_branching=" << *m.max_stage2_branching << '\n';
    if (m.failure) {
      out << key << "counterexample=" << to_string(m.failure->word, a) << '\n';
      out << key << "counterexample.automaton=" << true_false(m.failure->in_automaton) << '\n';
      out << key << "counterexample.complement=" << true_false(m.failure->in_complement) << '\n';
    }
    if (timing) out << key << "seconds=" << m.seconds << '\n';
  }
  if (r.cross_check) {
    out << "cross_check.agree=" << true_false(r.cross_check->agree) << '\n';
    if (auto& f = r.cross_check->failure) {
      out << "cross_check.word=" << to_string(f->word, a) << '\n';
      out << "cross_check." << method_name(f->first) << '=' << true_false(f->first_verdict) << '\n';
      out << "cross_check." << method_name(f->second) << '=' << true_false(f->second_verdict)
          << '\n';
    }
  }
  out << "result=" << (r.passed() ? "pass" : "fail") << '\n';
  return out.str();
}

}  // namespace buchi
