#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "buchi/nbw.hpp"

namespace buchi {

struct dag_annotation {
  enum class kind { none, profiles, prospective, retro, lambda };
  kind which = kind::none;
  /// Retrospection level for retro and lambda.
  std::size_t k = 0;
};

/// Parses "profiles", "prospective", "retro:K" or "lambda:K".
dag_annotation parse_annotation(std::string_view text);

/// Graphviz rendering of the first `depth` levels of the run DAG.
///
/// Nodes are labeled "state@level"; each level's profile classes are boxed
/// in order, smallest first. Edges removed by pruning are dashed. Ranks and
/// labels come from the periodic view and are shown under the node name.
/// Throws not_rejecting for rank annotations on accepting DAGs.
std::string dag_to_dot(const nbw& a, const lasso_word& w, std::size_t depth,
                       const dag_annotation& annotation = {});

}  // namespace buchi
