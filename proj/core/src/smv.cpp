#include "buchi/smv.hpp"

#include <sstream>

namespace buchi {

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string array_of(std::size_t n, const std::string& value) {
  return "[" + join(std::vector<std::string>(n, value), ",") + "]";
}

}  // namespace

std::string to_smv(const nbw& a) {
  const std::size_t n = a.num_states();
  if (n == 0) throw input_error("SMV export needs at least one state");
  if (a.alphabet_size() == 0) throw input_error("SMV export needs a nonempty alphabet");
  std::size_t non_accepting = 0;
  for (state_id q = 0; q < n; ++q) non_accepting += !a.is_accepting(q);
  const std::size_t m = 2 * non_accepting;
  const std::string bot = std::to_string(m + 1);
  const std::string top = std::to_string(m);

  std::vector<std::string> evens;
  for (std::size_t r = 0; r <= m; r += 2) evens.push_back(std::to_string(r));
  const std::string even_set = "{" + join(evens, ",") + "}";

  // preds[q][s]: states with an s-transition into q
  std::vector<std::vector<std::vector<state_id>>> preds(
      n, std::vector<std::vector<state_id>>(a.alphabet_size()));
  for (state_id p = 0; p < n; ++p)
    for (symbol_id s = 0; s < a.alphabet_size(); ++s)
      for (state_id q : a.successors(p, s)) preds[q][s].push_back(p);

  std::ostringstream out;
  out << "typedef STATE 0.." << n - 1 << ";  /* Size for complemented automaton: " << n
      << ", maximum allowed rank = " << m << " */\n";
  out << "module main() {\n";
  out << " letter: {" << join(a.alphabet(), ",") << "};  /* The transition letter */\n";
  out << " rank: array STATE of 0.." << bot << ";  /* The value " << bot
      << " represents bottom */\n";
  out << " phase : 0..1;  /* The phase of the automaton, ranks " << top << " or " << bot
      << " in phase 0 */\n";
  out << " subset: array STATE of boolean;  /* The obligation set vector */\n";
  std::vector<std::string> init_rank;
  for (state_id q = 0; q < n; ++q) init_rank.push_back(a.is_initial(q) ? top : bot);
  out << " init(rank) := [" << join(init_rank, ",") << "];  /* " << top
      << " to initial states, " << bot << " to others */\n";
  out << " init(subset) := " << array_of(n, "1") << ";  /* initially rejecting */\n";
  out << " init(phase) := 0;\n";
  out << " next(phase) := {i : i=0..1, i >= phase};\n\n";

  out << " /* Define the rank of states in the next time step. Cases fall through. */\n";
  for (state_id q = 0; q < n; ++q) {
    bool uniform = true;
    for (symbol_id s = 1; s < a.alphabet_size(); ++s) uniform = uniform && preds[q][s] == preds[q][0];

    std::vector<std::string> sources;
    for (symbol_id s = 0; s < a.alphabet_size(); ++s) {
      if (uniform && s > 0) break;
      std::vector<std::string> ids;
      for (state_id p : preds[q][s]) ids.push_back(std::to_string(p));
      std::string from = ids.empty() ? "none" : join(ids, ",");
      sources.push_back("from " + from + " on " + (uniform ? join(a.alphabet(), " and ") : a.symbol_name(s)));
    }
    out << " /* state " << q << " (" << a.state_name(q) << ") has transitions "
        << join(sources, ", ") << (a.is_accepting(q) ? "; accepting" : "") << " */\n";
    out << " next(rank[" << q << "]) := case {\n";
    for (symbol_id s = 0; s < a.alphabet_size(); ++s) {
      if (uniform && s > 0) break;
      std::string guard = uniform ? "" : "letter=" + a.symbol_name(s) + " & ";
      const auto& ps = preds[q][s];
      if (ps.empty()) {
        out << "    " << (uniform ? "1" : "letter=" + a.symbol_name(s)) << " : " << bot << ";\n";
        continue;
      }
      std::vector<std::string> ranks, dead;
      for (state_id p : ps) {
        ranks.push_back("rank[" + std::to_string(p) + "]");
        dead.push_back(ranks.back() + "=" + bot);
      }
      std::string r = ranks.size() == 1 ? ranks[0] : "min(" + join(ranks, ", ") + ")";
      out << "    " << guard << join(dead, " & ") << " : " << bot << ";\n";
      out << "    " << guard << "next(phase)=0 : " << top << ";\n";
      if (a.is_accepting(q)) {
        out << "    " << guard << "phase=0 & next(phase)=1 : {i : i=0.." << m << ", i <= " << r
            << " & i in " << even_set << "};\n";
        out << "    " << guard << "phase=1 : {i : i=0.." << m << ", i in {" << r << ", " << r
            << "-1} & i in " << even_set << "};\n";
      } else {
        out << "    " << guard << "phase=0 & next(phase)=1 : {i : i=0.." << m << ", i <= " << r
            << "};\n";
        out << "    " << guard << "phase=1 : " << r << ";\n";
      }
    }
    out << " };\n\n";
  }

  const std::string empty = array_of(n, "0");
  out << " /* Defining the transitions of the P-set */\n";
  out << " if (next(phase)=0) {\n";
  out << "     forall (i in STATE) next(subset[i]) := 1;\n";
  out << " } else {\n";
  out << "   if (subset=" << empty << ") { /* The P-set is empty */\n";
  out << "     forall (i in STATE) next(subset[i]) := next(rank[i]) in " << even_set << ";\n";
  out << "   } else { /* The P-set is non-empty */\n";
  const std::size_t k = a.alphabet_size();
  for (symbol_id s = 0; s < k; ++s) {
    if (s + 1 < k)
      out << "     " << (s ? "} else { " : "") << "if (letter=" << a.symbol_name(s) << ") {\n";
    else if (k > 1)
      out << "     } else { /* letter=" << a.symbol_name(s) << " */\n";
    for (state_id q = 0; q < n; ++q) {
      std::vector<std::string> obliged;
      for (state_id p : preds[q][s]) obliged.push_back("subset[" + std::to_string(p) + "]");
      std::string src = obliged.empty() ? "0" : "(" + join(obliged, " | ") + ")";
      out << "       next(subset[" << q << "]) := " << src << " & next(rank[" << q << "]) in "
          << even_set << ";\n";
    }
  }
  out << " " << std::string(k + 1, '}') << "\n";
  out << " SPEC 0;\n";
  out << " FAIRNESS subset=" << empty << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace buchi
