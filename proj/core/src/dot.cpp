#include "buchi/dot.hpp"

#include <charconv>
#include <optional>
#include <sstream>

#include "buchi/run_dag.hpp"

namespace buchi {

namespace {

std::string node_id(state_id q, std::size_t level) {
  return "n" + std::to_string(level) + "_" + std::to_string(q);
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

dag_annotation parse_annotation(std::string_view text) {
  using kind = dag_annotation::kind;
  if (text == "none") return {kind::none, 0};
  if (text == "profiles") return {kind::profiles, 0};
  if (text == "prospective") return {kind::prospective, 0};
  auto colon = text.find(':');
  if (colon != std::string_view::npos) {
    auto head = text.substr(0, colon);
    auto tail = text.substr(colon + 1);
    std::size_t k = 0;
    auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), k);
    if (ec == std::errc() && ptr == tail.data() + tail.size() && !tail.empty()) {
      if (head == "retro") return {kind::retro, k};
      if (head == "lambda") return {kind::lambda, k};
    }
  }
  throw input_error("unknown annotation '" + std::string(text) +
                    "'; expected profiles, prospective, retro:K or lambda:K");
}

std::string dag_to_dot(const nbw& a, const lasso_word& w, std::size_t depth,
                       const dag_annotation& annotation) {
  using kind = dag_annotation::kind;
  if (depth == 0) throw input_error("depth must be at least 1");
  run_dag_prefix dag = build_dag_prefix(a, w, depth);
  run_dag_prefix pruned = prune_edges(dag);
  std::vector<ordered_partition> parts = level_partitions(a, w, depth);

  std::optional<periodic_dag> view;
  node_ranking ranks;
  std::vector<std::vector<bool>> labels;
  switch (annotation.which) {
    case kind::prospective:
      view.emplace(a, w);
      ranks = prospective_ranking(*view);
      break;
    case kind::retro:
      view.emplace(a, w, annotation.k);
      ranks = retrospective_ranking(*view);
      break;
    case kind::lambda:
      view.emplace(a, w, annotation.k);
      labels = lambda_labels(*view);
      break;
    default:
      break;
  }

  std::ostringstream out;
  out << "digraph rundag {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=plaintext];\n";
  for (std::size_t i = 0; i < depth; ++i) {
    out << "  subgraph cluster_level" << i << " {\n";
    out << "    label=\"level " << i << "\";\n";
    out << "    style=invis;\n";
    const auto& classes = parts[i].classes();
    for (std::size_t c = 0; c < classes.size(); ++c) {
      out << "    subgraph cluster_" << i << "_" << c << " {\n";
      out << "      style=solid;\n";
      out << "      label=\"\";\n";
      for (state_id q : classes[c]) {
        std::string label = a.state_name(q) + "@" + std::to_string(i);
        if (annotation.which == kind::profiles)
          label += "\\nΛ=" + std::string(dag.accepting.contains(q) ? "1" : "0") +
                   " class=" + std::to_string(c);
        if (!ranks.empty()) label += "\\nr=" + std::to_string(ranks[view->fold(i)][q]);
        if (!labels.empty()) label += labels[view->fold(i)][q] ? "\\n⊤" : "\\n⊥";
        out << "      " << node_id(q, i) << " [label=" << quoted(label)
            << (dag.accepting.contains(q) ? ", fontcolor=blue" : "") << "];\n";
      }
      out << "    }\n";
    }
    out << "  }\n";
  }
  for (std::size_t i = 0; i + 1 < depth; ++i) {
    for (state_id p : dag.levels[i]) {
      for (state_id q : dag.edges[i][p]) {
        out << "  " << node_id(p, i) << " -> " << node_id(q, i + 1) << " [label="
            << quoted(a.symbol_name(w[i]))
            << (pruned.edges[i][p].contains(q) ? "" : ", style=dashed") << "];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace buchi
