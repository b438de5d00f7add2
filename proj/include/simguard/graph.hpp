#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "simguard/common.hpp"
#include "simguard/matrix.hpp"

namespace simguard {

constexpr int kUnlabeled = -1;

/// Undirected attributed graph with dense 0-based node ids. Immutable
/// after construction; edges are stored deduplicated with u < v and no
/// self-loops. Construction validates every invariant and throws
/// ValidationError on violation.
class AttributedGraph {
  public:
    AttributedGraph(Matrix features, std::vector<std::pair<NodeId, NodeId>> edges,
                    std::vector<int> labels);

    NodeId n_nodes() const { return n_nodes_; }
    std::size_t d_feat() const { return features_.cols(); }
    int n_classes() const { return n_classes_; }
    std::size_t n_edges() const { return edges_.size(); }

    const Matrix& features() const { return features_; }
    const std::vector<std::pair<NodeId, NodeId>>& edges() const { return edges_; }
    const std::vector<int>& labels() const { return labels_; }

    int label(NodeId v) const { return labels_[static_cast<std::size_t>(v)]; }
    bool is_labeled(NodeId v) const { return label(v) != kUnlabeled; }

    /// Sorted neighbor list of v (self excluded).
    const std::vector<NodeId>& neighbors(NodeId v) const {
        return adjacency_[static_cast<std::size_t>(v)];
    }
    NodeId degree(NodeId v) const {
        return static_cast<NodeId>(neighbors(v).size());
    }
    bool has_edge(NodeId u, NodeId v) const;

    /// All node ids whose label equals c.
    IdSet nodes_with_label(int c) const;
    IdSet all_ids() const;

  private:
    NodeId n_nodes_ = 0;
    int n_classes_ = 0;
    Matrix features_;
    std::vector<std::pair<NodeId, NodeId>> edges_;
    std::vector<int> labels_;
    std::vector<std::vector<NodeId>> adjacency_;
};

/// Disjoint train/unseen node partition of a graph.
struct SplitSpec {
    IdSet train_nodes;
    IdSet unseen_nodes;
    std::uint64_t seed = 0;
};

/// Clean/backdoored role annotation over a node set.
struct RoleMask {
    IdSet clean_labeled;
    IdSet backdoored;
    int target_class = 0;
};

struct SubgraphResult {
    AttributedGraph graph;
    std::vector<NodeId> to_original;  // new id -> original id
    std::vector<NodeId> to_local;     // original id -> new id, -1 if absent
};

/// Seeded partition into round(ratio*N) train nodes and the rest.
SplitSpec inductive_split(const AttributedGraph& g, double ratio, std::uint64_t seed);

/// Induced subgraph on ids, nodes renumbered densely; edges crossing out
/// of ids are dropped.
SubgraphResult subgraph(const AttributedGraph& g, const IdSet& ids);

}  // namespace simguard
