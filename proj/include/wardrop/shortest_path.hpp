#pragma once

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "wardrop/network.hpp"

namespace wardrop {

struct ShortestPathTree {
    std::vector<double> dist;       // inf where unreachable
    std::vector<int> pred_edge;     // entering edge on the shortest path, -1 at origin/unreached
};

/// Dijkstra over fixed non-negative edge costs. Ties are broken toward the
/// lexicographically smallest node sequence (node indices follow id order),
/// so results are reproducible.
ShortestPathTree dijkstra(const Network& net, int origin, const Eigen::VectorXd& edge_costs);

/// Node sequence of the tree path into `node` (origin first). Empty if unreached.
std::vector<int> tree_path_nodes(const Network& net, const ShortestPathTree& tree, int node);
std::vector<int> tree_path_edges(const ShortestPathTree& tree, const Network& net, int node);

/// Zero-flow path cost origin->destination including intermediate node costs;
/// nullopt when unreachable.
std::optional<double> zero_flow_shortest_cost(const Network& net, int origin, int destination);

}  // namespace wardrop
