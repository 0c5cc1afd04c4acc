#pragma once

#include <vector>

#include "wardrop/incentives.hpp"
#include "wardrop/network.hpp"
#include "wardrop/paths.hpp"

namespace wardrop {

/// Result of rewriting every costly intersection as a serial congestion edge
/// plus per-path constant-cost parallels. `path_map[p]` is the image of flat
/// path p; at matching flows its cost in `net` equals the original
/// incentivized path cost.
struct SplitTransform {
    Network net;                 // classical: all node costs zero
    std::vector<Path> path_map;  // flat path index -> transformed path
    std::vector<int> serial_edge;  // original node index -> serial edge in net, -1 if not split
};

/// Node splitting for per-path incentives on path-enumerable networks.
/// Each intersection v becomes entry -> (serial edge, cost c_v) -> mid ->
/// (one constant parallel per distinct traversing path, cost u_v^p) -> exit.
/// Demands at v attach so that origins/destinations skip the node cost.
/// Throws on per-turn schedules (use turn_expand).
SplitTransform split_nodes_transform(const Network& net, const PathTable& table,
                                     const IncentiveSchedule& incentives);

/// One movement arc of a turn expansion.
struct MovementArc {
    int node = -1;      // original intersection
    int in_edge = -1;   // original edge indices
    int out_edge = -1;
    int arc = -1;       // edge index in the expanded network
};

/// Turn expansion for per-turn incentives. Intersections become per-in-edge
/// and per-out-edge ports; each feasible movement is a constant-cost arc
/// carrying its offset, and all movement arcs of a node share the node's
/// congestion cost through an edge group evaluated at their total flow (the
/// node flow). Origins/destinations connect through the retained center node
/// and bypass the node cost.
struct TurnExpansion {
    Network net;
    std::vector<int> passthrough_edge;  // original edge -> expanded edge
    std::vector<int> node_group;        // original node -> group index (-1 for terminals)
    std::vector<MovementArc> movements;
    std::vector<int> center_node;       // original node -> expanded node index

    /// Rewrites the movement-arc constants from a schedule (same topology).
    void apply_offsets(const IncentiveSchedule& incentives);
    /// Recovers original-network edge and node flows from expanded edge flows.
    void project_flows(const Eigen::VectorXd& expanded_edge_flows, Eigen::VectorXd& edge_flows,
                       Eigen::VectorXd& node_flows) const;
    /// Sum of offset * movement flow (the incentive part of the social cost).
    double incentive_term(const Eigen::VectorXd& expanded_edge_flows) const;
};

TurnExpansion turn_expand(const Network& net, const IncentiveSchedule& incentives,
                          bool allow_uturns = false);

}  // namespace wardrop
