#include "wardrop/shortest_path.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace wardrop {

namespace {

std::vector<int> walk_nodes(const Network& net, const std::vector<int>& pred_edge, int node) {
    std::vector<int> nodes{node};
    int v = node;
    while (pred_edge[static_cast<size_t>(v)] >= 0) {
        const auto& e = net.edge(pred_edge[static_cast<size_t>(v)]);
        v = e.tail;
        nodes.push_back(v);
        if (nodes.size() > static_cast<size_t>(net.num_nodes()) + 1)
            throw std::logic_error("predecessor cycle");
    }
    std::reverse(nodes.begin(), nodes.end());
    return nodes;
}

}  // namespace

ShortestPathTree dijkstra(const Network& net, int origin, const Eigen::VectorXd& edge_costs) {
    const int n = net.num_nodes();
    if (edge_costs.size() != net.num_edges())
        throw std::invalid_argument("edge cost vector size mismatch");
    ShortestPathTree tree;
    tree.dist.assign(static_cast<size_t>(n), std::numeric_limits<double>::infinity());
    tree.pred_edge.assign(static_cast<size_t>(n), -1);
    tree.dist[static_cast<size_t>(origin)] = 0.0;

    using Item = std::pair<double, int>;  // (dist, node); node index breaks ties
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    heap.emplace(0.0, origin);
    std::vector<char> done(static_cast<size_t>(n), 0);

    while (!heap.empty()) {
        const auto [d, u] = heap.top();
        heap.pop();
        if (done[static_cast<size_t>(u)] || d > tree.dist[static_cast<size_t>(u)]) continue;
        done[static_cast<size_t>(u)] = 1;
        for (int ei : net.out_edges(u)) {
            const auto& e = net.edge(ei);
            const double c = edge_costs[ei];
            if (c < 0.0) throw std::invalid_argument("negative edge cost in shortest path");
            const double nd = d + c;
            double& dv = tree.dist[static_cast<size_t>(e.head)];
            if (nd < dv) {
                dv = nd;
                tree.pred_edge[static_cast<size_t>(e.head)] = ei;
                done[static_cast<size_t>(e.head)] = 0;
                heap.emplace(nd, e.head);
            } else if (nd == dv && tree.pred_edge[static_cast<size_t>(e.head)] != ei) {
                // Equal-cost alternative: keep the lexicographically smaller
                // path. Reopening the head keeps downstream ties consistent.
                auto cur = walk_nodes(net, tree.pred_edge, e.head);
                std::vector<int> cand = walk_nodes(net, tree.pred_edge, u);
                cand.push_back(e.head);
                bool take = cand < cur;
                if (cand == cur)  // parallel edges: lowest edge index wins
                    take = ei < tree.pred_edge[static_cast<size_t>(e.head)];
                if (take) {
                    tree.pred_edge[static_cast<size_t>(e.head)] = ei;
                    done[static_cast<size_t>(e.head)] = 0;
                    heap.emplace(nd, e.head);
                }
            }
        }
    }
    return tree;
}

std::vector<int> tree_path_nodes(const Network& net, const ShortestPathTree& tree, int node) {
    if (!std::isfinite(tree.dist[static_cast<size_t>(node)])) return {};
    return walk_nodes(net, tree.pred_edge, node);
}

std::vector<int> tree_path_edges(const ShortestPathTree& tree, const Network& net, int node) {
    std::vector<int> edges;
    int v = node;
    while (tree.pred_edge[static_cast<size_t>(v)] >= 0) {
        const int ei = tree.pred_edge[static_cast<size_t>(v)];
        edges.push_back(ei);
        v = net.edge(ei).tail;
    }
    std::reverse(edges.begin(), edges.end());
    return edges;
}

std::optional<double> zero_flow_shortest_cost(const Network& net, int origin, int destination) {
    Eigen::VectorXd costs(net.num_edges());
    for (int i = 0; i < net.num_edges(); ++i) {
        const auto& e = net.edge(i);
        double c = e.cost.value(0.0);
        if (e.group >= 0) c += net.groups()[static_cast<size_t>(e.group)].cost.value(0.0);
        const auto& head = net.node(e.head);
        if (head.role == NodeRole::Intersection && e.head != destination)
            c += head.base_cost.value(0.0);
        costs[i] = c;
    }
    const auto tree = dijkstra(net, origin, costs);
    const double d = tree.dist[static_cast<size_t>(destination)];
    if (!std::isfinite(d)) return std::nullopt;
    return d;
}

}  // namespace wardrop
