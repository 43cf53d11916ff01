#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "buchi/dense.hpp"
#include "buchi/nbw.hpp"
#include "buchi/partition.hpp"

namespace buchi {

/// The first levels of the run DAG of an automaton on a word.
struct run_dag_prefix {
  /// levels[i] holds the states q with a node <q,i>.
  std::vector<state_set> levels;
  /// edges[i][q] holds the successors of <q,i> on level i+1.
  std::vector<std::vector<state_set>> edges;
  /// States whose nodes carry label 1.
  state_set accepting;

  std::size_t depth() const { return levels.size(); }
};

run_dag_prefix build_dag_prefix(const nbw& a, const lasso_word& w, std::size_t depth);

/// Per-level preorders of the first `depth` levels, computed by propagation.
std::vector<ordered_partition> level_partitions(const nbw& a, const lasso_word& w,
                                                std::size_t depth);

/// Keeps the edges whose source is maximal among the predecessors of the target.
run_dag_prefix prune_edges(const run_dag_prefix& dag);

/// A set of run-DAG nodes on the quotient levels, one state set per level.
using node_set = std::vector<state_set>;

/// Node ranks on the quotient levels; -1 marks absent nodes.
using node_ranking = std::vector<std::vector<int>>;

/// The run DAG folded onto its first recurring level fingerprint.
///
/// Levels [0, stem + period) are kept explicitly; the successor of the last
/// level is level `stem`. When built with a retrospection level k, levels
/// after k also carry the per-class top/bottom labels and the fingerprint
/// includes them.
class periodic_dag {
 public:
  periodic_dag(const nbw& a, const lasso_word& w, std::optional<std::size_t> k = std::nullopt);

  const dense_automaton& automaton() const { return a_; }
  std::size_t stem() const { return stem_; }
  std::size_t period() const { return period_; }
  std::size_t num_levels() const { return partitions_.size(); }
  std::optional<std::size_t> retrospection_level() const { return k_; }

  /// Quotient level of level i of the unfolded DAG.
  std::size_t fold(std::size_t i) const {
    return i < num_levels() ? i : stem_ + (i - stem_) % period_;
  }
  std::size_t next(std::size_t level) const {
    return level + 1 < num_levels() ? level + 1 : stem_;
  }

  const ordered_partition& partition(std::size_t level) const { return partitions_[level]; }
  state_set states(std::size_t level) const { return partitions_[level].support(); }
  symbol_id letter(std::size_t level) const { return letters_[level]; }
  /// Successors of <q,level> on level next(level).
  state_set successors(std::size_t level, state_id q) const { return succ_[level][q]; }
  /// Successors along retained (profile-maximal) edges.
  state_set pruned_successors(std::size_t level, state_id q) const {
    return pruned_[level][q];
  }
  /// Per-class labels for levels after k (true = top); empty otherwise.
  const std::vector<bool>& class_labels(std::size_t level) const { return labels_[level]; }

  node_set all_nodes() const;
  node_set accepting_nodes() const;

 private:
  dense_automaton a_;
  std::optional<std::size_t> k_;
  std::size_t stem_ = 0;
  std::size_t period_ = 0;
  std::vector<ordered_partition> partitions_;
  std::vector<std::vector<bool>> labels_;
  std::vector<symbol_id> letters_;
  std::vector<std::vector<state_set>> succ_;
  std::vector<std::vector<state_set>> pruned_;
};

/// Raised when a ranking is requested for an accepting run DAG.
class not_rejecting : public std::runtime_error {
 public:
  not_rejecting() : std::runtime_error("run DAG is accepting; no odd ranking exists") {}
};

/// Nodes of `within` that start an infinite path inside `within`.
node_set infinite_nodes(const periodic_dag& g, const node_set& within, bool pruned);
/// Nodes of `within` that reach a node of `targets` inside `within`.
node_set reaching_nodes(const periodic_dag& g, const node_set& within, const node_set& targets,
                        bool pruned);

/// Nodes that are finite in the pruned DAG.
node_set finite_in_pruned(const periodic_dag& g);
/// The pruned DAG with its finite nodes removed.
node_set g_double_prime(const periodic_dag& g);
/// Whether some path visits infinitely many accepting nodes.
bool has_accepting_path(const periodic_dag& g);
bool g_double_prime_has_infinitely_many_f_nodes(const periodic_dag& g);
/// First level after which the number of classes meeting the reduced DAG is constant.
std::size_t stabilization_level(const periodic_dag& g);
/// Least k such that every accepting node after level k is finite in the
/// pruned DAG; absent when the DAG is accepting.
std::optional<std::size_t> f_finite_level(const periodic_dag& g);

/// Ranks from alternately removing finite and accepting-free nodes.
/// Throws not_rejecting when nodes survive 2|Q\F| + 1 rounds.
node_ranking prospective_ranking(const periodic_dag& g);

/// Per-node top (true) / bottom labels; every node up to level k is top.
/// Requires a DAG built with a retrospection level.
std::vector<std::vector<bool>> lambda_labels(const periodic_dag& g);
/// Every bottom-labeled node is finite in the pruned DAG.
bool is_legal(const periodic_dag& g);
/// Rank m = 2|Q\F| up to level k, then twice the number of larger top
/// classes, plus one for top nodes.
node_ranking retrospective_ranking(const periodic_dag& g);

struct ranking_check {
  bool is_ranking = false;
  bool is_odd = false;
  int bound = -1;
};
/// Accepting nodes even, no increase along edges, and for odd rankings no
/// cycle among nodes sharing an even rank.
ranking_check check_ranking(const periodic_dag& g, const node_ranking& r);

/// One level of the reduced split tree: node labels from left to right.
using split_level = std::vector<state_set>;
/// The reduced split tree, with level 0 split by acceptance so that levels
/// align with run-DAG levels.
std::vector<split_level> reduced_split_tree(const nbw& a, const lasso_word& w, std::size_t depth);

}  // namespace buchi
