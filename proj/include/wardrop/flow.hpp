#pragma once

#include <Eigen/Core>
#include <optional>

#include "wardrop/incentives.hpp"
#include "wardrop/network.hpp"
#include "wardrop/paths.hpp"

namespace wardrop {

/// Edge and node flows, optionally backed by the path flows they were
/// aggregated from. Node flow counts intermediate traversals only: a path's
/// origin and destination contribute nothing.
struct FlowAssignment {
    Eigen::VectorXd edge_flows;                 // |E|
    Eigen::VectorXd node_flows;                 // |V|
    std::optional<Eigen::VectorXd> path_flows;  // flat over a PathTable
    std::vector<double> od_demands;             // demand satisfied, per OD
};

/// Sums path flows onto edges and intermediate nodes.
FlowAssignment aggregate_flows(const Eigen::VectorXd& path_flows, const Network& net,
                               const PathTable& table);

/// Per-OD conservation: path flows non-negative and summing to demand.
bool flows_feasible(const FlowAssignment& f, const Network& net, const PathTable& table,
                    double tol = 1e-9);

/// Node traversal cost c_v(f_v) + offset; throws if the result is negative
/// (offset outside its admissible range).
double node_cost(const Network& net, int node, double node_flow, double offset);

/// Full path cost: edge costs, intermediate node costs and this path's offsets.
double path_cost(const Network& net, const PathTable& table, int path_flat,
                 const FlowAssignment& flows, const IncentiveSchedule& incentives);

/// All path costs at once (same order as path flows).
Eigen::VectorXd all_path_costs(const Network& net, const PathTable& table,
                               const FlowAssignment& flows, const IncentiveSchedule& incentives);

/// Social cost sum_p c_p * f_p (requires path flows).
double social_cost(const Network& net, const PathTable& table, const FlowAssignment& flows,
                   const IncentiveSchedule& incentives);

struct SocialCostParts {
    double base = 0.0;            // sum_e c_e f_e + sum_v c_v f_v
    double incentive_term = 0.0;  // sum_p f_p u_p
    double total() const { return base + incentive_term; }
};

/// Splits the social cost into the path-invariant part and the offset part;
/// base + incentive_term reproduces social_cost exactly.
SocialCostParts decompose_social_cost(const Network& net, const PathTable& table,
                                      const FlowAssignment& flows,
                                      const IncentiveSchedule& incentives);

/// Path-invariant cost from edge/node flows alone (edge-based mode).
double base_social_cost(const Network& net, const FlowAssignment& flows);

}  // namespace wardrop
