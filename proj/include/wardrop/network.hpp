#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "wardrop/cost_function.hpp"

namespace wardrop {

enum class NodeRole { Intersection, Terminal };

struct NodeSpec {
    std::string id;
    NodeRole role = NodeRole::Terminal;
    CostFunction base_cost = CostFunction::constant(0.0);
    // Operating domain for the base cost; <= 0 means "use total demand".
    double flow_max = -1.0;
};

struct EdgeSpec {
    int tail = -1;
    int head = -1;
    CostFunction cost = CostFunction::constant(0.0);
    // Index into Network::groups() of a congestion component shared with
    // other edges and evaluated at their total flow; -1 if none.
    int group = -1;
};

/// A congestion cost shared by a set of edges (evaluated at their summed flow).
struct SharedGroup {
    std::string id;
    CostFunction cost = CostFunction::constant(0.0);
};

struct Demand {
    int origin = -1;
    int destination = -1;
    double amount = 0.0;
};

/// id ordering used everywhere: numeric ids compare numerically, otherwise
/// byte-wise; all-digit ids sort before non-numeric ones.
bool node_id_less(const std::string& a, const std::string& b);

/// Directed network with edge costs, optional intersection (node) costs and
/// per-OD demands. Nodes and edges are canonically ordered at construction so
/// identical inputs produce identical index assignments.
class Network {
public:
    Network(std::vector<NodeSpec> nodes, std::vector<EdgeSpec> edges_by_node_index,
            std::vector<Demand> demands, std::vector<SharedGroup> groups = {});

    /// Convenience constructor resolving edges/demands given by node id.
    struct EdgeById {
        std::string tail, head;
        CostFunction cost = CostFunction::constant(0.0);
    };
    struct DemandById {
        std::string origin, destination;
        double amount = 0.0;
    };
    static Network from_ids(std::vector<NodeSpec> nodes, const std::vector<EdgeById>& edges,
                            const std::vector<DemandById>& demands);

    int num_nodes() const { return static_cast<int>(nodes_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<NodeSpec>& nodes() const { return nodes_; }
    const std::vector<EdgeSpec>& edges() const { return edges_; }
    const std::vector<SharedGroup>& groups() const { return groups_; }
    const std::vector<Demand>& demands() const { return demands_; }
    const NodeSpec& node(int i) const { return nodes_[static_cast<size_t>(i)]; }
    const EdgeSpec& edge(int i) const { return edges_[static_cast<size_t>(i)]; }

    int node_index(const std::string& id) const;  // -1 if unknown
    /// Edges leaving a node, ordered by (head id, edge index).
    const std::vector<int>& out_edges(int node) const {
        return out_edges_[static_cast<size_t>(node)];
    }
    const std::vector<int>& in_edges(int node) const {
        return in_edges_[static_cast<size_t>(node)];
    }

    double total_demand() const { return total_demand_; }
    /// Node-cost operating domain: the node's flow_max or total demand.
    double node_flow_max(int node) const;

    /// Replace one edge's cost function (used to retune constant offsets on
    /// derived networks without rebuilding them).
    void set_edge_cost(int edge, CostFunction cost);

    /// Throws unless every positive-demand OD pair is connected.
    void check_demands_routable() const;

private:
    void validate() const;

    std::vector<NodeSpec> nodes_;
    std::vector<EdgeSpec> edges_;
    std::vector<SharedGroup> groups_;
    std::vector<Demand> demands_;
    std::vector<std::vector<int>> out_edges_;
    std::vector<std::vector<int>> in_edges_;
    std::unordered_map<std::string, int> index_;
    double total_demand_ = 0.0;
};

}  // namespace wardrop
