#pragma once

#include <string>
#include <utility>
#include <vector>

#include "simet/linalg.hpp"

namespace simet {

/// Connected undirected graph over string-labeled nodes. Node order is the
/// order labels were first seen, and every matrix/report echoes that order.
class Graph {
public:
    /// Builds from an edge list; labels register in encounter order.
    /// Rejects self-loops, duplicate edges, and disconnected graphs.
    explicit Graph(const std::vector<std::pair<std::string, std::string>>& edges);

    std::size_t node_count() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
    const std::vector<std::vector<std::size_t>>& adjacency() const { return adj_; }

private:
    std::vector<std::string> labels_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::vector<std::vector<std::size_t>> adj_;
};

/// Hop-count distance matrix by breadth-first search from every node.
SymMatrix bfs_distances(const Graph& g);

/// Complete bipartite K_{2,3}: parts {A, E} and {B, C, D}, nodes registered
/// in the order A, B, C, D, E.
Graph k23_graph();

struct GraphNegativeTypeReport {
    std::vector<std::string> node_order;
    SymMatrix distances;
    NegativeTypeVerdict necessary;
    CndVerdict cnd;

    GraphNegativeTypeReport(std::vector<std::string> order, SymMatrix d, NegativeTypeVerdict nt,
                            CndVerdict c)
        : node_order(std::move(order)), distances(std::move(d)), necessary(nt), cnd(std::move(c)) {}
};

/// Spectral negative-type screening of the graph metric: the one-positive-
/// eigenvalue necessary condition plus the exact sum-zero CND test.
GraphNegativeTypeReport graph_negative_type_report(const Graph& g, double tol);

}  // namespace simet
