#include "simet/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace simet {

Graph::Graph(const std::vector<std::pair<std::string, std::string>>& edges) {
    if (edges.empty()) throw InputError("Graph: edge list is empty");
    std::map<std::string, std::size_t> index;
    auto intern = [&](const std::string& label) {
        auto [it, inserted] = index.emplace(label, labels_.size());
        if (inserted) labels_.push_back(label);
        return it->second;
    };
    for (const auto& [a, b] : edges) {
        const std::size_t u = intern(a), v = intern(b);
        if (u == v) throw InputError("Graph: self-loop on node '" + a + "'");
        const auto e = std::minmax(u, v);
        if (std::find(edges_.begin(), edges_.end(), std::make_pair(e.first, e.second)) !=
            edges_.end())
            throw InputError("Graph: duplicate edge " + a + " -- " + b);
        edges_.emplace_back(e.first, e.second);
    }
    adj_.resize(labels_.size());
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }

    // Connectivity from node 0.
    std::vector<bool> seen(labels_.size(), false);
    std::deque<std::size_t> queue{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop_front();
        for (std::size_t v : adj_[u])
            if (!seen[v]) {
                seen[v] = true;
                ++reached;
                queue.push_back(v);
            }
    }
    if (reached != labels_.size()) throw InputError("Graph: graph is not connected");
}

SymMatrix bfs_distances(const Graph& g) {
    const std::size_t n = g.node_count();
    SymMatrix d(n);
    for (std::size_t src = 0; src < n; ++src) {
        std::vector<int> dist(n, -1);
        std::deque<std::size_t> queue{src};
        dist[src] = 0;
        while (!queue.empty()) {
            const std::size_t u = queue.front();
            queue.pop_front();
            for (std::size_t v : g.adjacency()[u])
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
        }
        for (std::size_t j = 0; j < n; ++j) d.set(src, j, static_cast<double>(dist[j]));
    }
    return d;
}

Graph k23_graph() {
    return Graph({{"A", "B"}, {"A", "C"}, {"A", "D"}, {"B", "E"}, {"C", "E"}, {"D", "E"}});
}

GraphNegativeTypeReport graph_negative_type_report(const Graph& g, double tol) {
    SymMatrix d = bfs_distances(g);
    NegativeTypeVerdict nt = negative_type_necessary(d, tol);
    CndVerdict cnd = is_cnd(d, tol);
    return GraphNegativeTypeReport(g.labels(), std::move(d), std::move(nt), std::move(cnd));
}

}  // namespace simet
