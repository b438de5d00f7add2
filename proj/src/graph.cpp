#include "simguard/graph.hpp"

#include <algorithm>
#include <cmath>

namespace simguard {

AttributedGraph::AttributedGraph(Matrix features, std::vector<std::pair<NodeId, NodeId>> edges,
                                 std::vector<int> labels)
    : features_(std::move(features)), labels_(std::move(labels)) {
    n_nodes_ = static_cast<NodeId>(features_.rows());
    if (labels_.size() != static_cast<std::size_t>(n_nodes_))
        throw ValidationError("graph: label count does not match node count");

    for (auto& [u, v] : edges) {
        if (u == v) throw ValidationError("graph: self-loop on node " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n_nodes_ || v >= n_nodes_)
            throw ValidationError("graph: edge endpoint out of range: " + std::to_string(u) +
                                  " " + std::to_string(v));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);

    adjacency_.assign(static_cast<std::size_t>(n_nodes_), {});
    for (const auto& [u, v] : edges_) {
        adjacency_[static_cast<std::size_t>(u)].push_back(v);
        adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());

    int max_label = -1;
    for (int l : labels_) {
        if (l < kUnlabeled) throw ValidationError("graph: invalid label " + std::to_string(l));
        max_label = std::max(max_label, l);
    }
    n_classes_ = max_label + 1;
}

bool AttributedGraph::has_edge(NodeId u, NodeId v) const {
    const auto& nbrs = neighbors(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

IdSet AttributedGraph::nodes_with_label(int c) const {
    IdSet out;
    for (NodeId v = 0; v < n_nodes_; ++v)
        if (label(v) == c) out.push_back(v);
    return out;
}

IdSet AttributedGraph::all_ids() const {
    IdSet out(static_cast<std::size_t>(n_nodes_));
    for (NodeId v = 0; v < n_nodes_; ++v) out[static_cast<std::size_t>(v)] = v;
    return out;
}

SplitSpec inductive_split(const AttributedGraph& g, double ratio, std::uint64_t seed) {
    if (!(ratio > 0.0 && ratio < 1.0))
        throw ArgumentError("inductive_split: ratio must be in (0,1)");
    const NodeId n = g.n_nodes();
    const NodeId n_train = static_cast<NodeId>(std::llround(ratio * static_cast<double>(n)));

    Rng rng(seed);
    std::vector<NodeId> order = g.all_ids();
    rng.shuffle(order);

    SplitSpec split;
    split.seed = seed;
    split.train_nodes.assign(order.begin(), order.begin() + n_train);
    split.unseen_nodes.assign(order.begin() + n_train, order.end());
    sort_unique(split.train_nodes);
    sort_unique(split.unseen_nodes);
    return split;
}

SubgraphResult subgraph(const AttributedGraph& g, const IdSet& ids) {
    IdSet sorted = ids;
    sort_unique(sorted);
    for (NodeId v : sorted)
        if (v < 0 || v >= g.n_nodes())
            throw ArgumentError("subgraph: unknown node id " + std::to_string(v));

    std::vector<NodeId> to_local(static_cast<std::size_t>(g.n_nodes()), -1);
    for (std::size_t i = 0; i < sorted.size(); ++i)
        to_local[static_cast<std::size_t>(sorted[i])] = static_cast<NodeId>(i);

    Matrix feats = take_rows(g.features(), sorted);
    std::vector<int> labels(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        labels[i] = g.label(sorted[i]);

    std::vector<std::pair<NodeId, NodeId>> edges;
    for (const auto& [u, v] : g.edges()) {
        NodeId lu = to_local[static_cast<std::size_t>(u)];
        NodeId lv = to_local[static_cast<std::size_t>(v)];
        if (lu >= 0 && lv >= 0) edges.emplace_back(lu, lv);
    }

    return SubgraphResult{AttributedGraph(std::move(feats), std::move(edges), std::move(labels)),
                          sorted, std::move(to_local)};
}

}  // namespace simguard
