#include "wardrop/flow.hpp"

#include <cmath>
#include <stdexcept>

namespace wardrop {

FlowAssignment aggregate_flows(const Eigen::VectorXd& path_flows, const Network& net,
                               const PathTable& table) {
    if (path_flows.size() != table.num_paths())
        throw std::invalid_argument("path flow vector size mismatch");
    FlowAssignment f;
    f.edge_flows = Eigen::VectorXd::Zero(net.num_edges());
    f.node_flows = Eigen::VectorXd::Zero(net.num_nodes());
    f.path_flows = path_flows;
    f.od_demands.assign(net.demands().size(), 0.0);
    for (int p = 0; p < table.num_paths(); ++p) {
        const double fp = path_flows[p];
        if (fp < 0.0) throw std::invalid_argument("negative path flow");
        if (fp == 0.0) continue;
        const Path& path = table.path(p);
        for (int ei : path.edges) {
            if (ei < 0 || ei >= net.num_edges())
                throw std::invalid_argument("path references unknown edge");
            f.edge_flows[ei] += fp;
        }
        for (int v : path.intermediate_nodes) f.node_flows[v] += fp;
    }
    f.od_demands.reserve(net.demands().size());
    for (const auto& d : net.demands()) f.od_demands.push_back(d.amount);
    return f;
}

bool flows_feasible(const FlowAssignment& f, const Network& net, const PathTable& table,
                    double tol) {
    if (!f.path_flows) return false;
    for (int p = 0; p < table.num_paths(); ++p)
        if ((*f.path_flows)[p] < -tol) return false;
    for (int od = 0; od < table.num_ods(); ++od) {
        const auto [first, last] = table.od_range(od);
        double sum = 0.0;
        for (int p = first; p < last; ++p) sum += (*f.path_flows)[p];
        const double demand = net.demands()[static_cast<size_t>(od)].amount;
        if (std::abs(sum - demand) > tol * std::max(1.0, demand)) return false;
    }
    return true;
}

double node_cost(const Network& net, int node, double node_flow, double offset) {
    const auto& n = net.node(node);
    if (node_flow < 0.0) throw std::invalid_argument("negative node flow");
    const double base = n.role == NodeRole::Intersection ? n.base_cost.value(node_flow) : 0.0;
    const double c = base + offset;
    if (c < -1e-12)
        throw std::domain_error("node cost driven negative at " + n.id +
                                " (offset outside admissible range)");
    return c;
}

double path_cost(const Network& net, const PathTable& table, int path_flat,
                 const FlowAssignment& flows, const IncentiveSchedule& incentives) {
    const Path& p = table.path(path_flat);
    double c = 0.0;
    for (int ei : p.edges) c += net.edge(ei).cost.value(flows.edge_flows[ei]);
    if (incentives.mode() == IncentiveMode::PerPath) {
        for (int v : p.intermediate_nodes)
            c += node_cost(net, v, flows.node_flows[v], incentives.path_offset(v, path_flat));
    } else {
        for (size_t s = 0; s + 1 < p.edges.size(); ++s) {
            const int v = p.nodes[s + 1];
            c += node_cost(net, v, flows.node_flows[v],
                           incentives.turn_offset(v, p.edges[s], p.edges[s + 1]));
        }
    }
    return c;
}

Eigen::VectorXd all_path_costs(const Network& net, const PathTable& table,
                               const FlowAssignment& flows, const IncentiveSchedule& incentives) {
    Eigen::VectorXd c(table.num_paths());
    for (int p = 0; p < table.num_paths(); ++p) c[p] = path_cost(net, table, p, flows, incentives);
    return c;
}

double social_cost(const Network& net, const PathTable& table, const FlowAssignment& flows,
                   const IncentiveSchedule& incentives) {
    if (!flows.path_flows) throw std::invalid_argument("social_cost needs path flows");
    return all_path_costs(net, table, flows, incentives).dot(*flows.path_flows);
}

SocialCostParts decompose_social_cost(const Network& net, const PathTable& table,
                                      const FlowAssignment& flows,
                                      const IncentiveSchedule& incentives) {
    if (!flows.path_flows) throw std::invalid_argument("decomposition needs path flows");
    SocialCostParts parts;
    parts.base = base_social_cost(net, flows);
    for (int p = 0; p < table.num_paths(); ++p) {
        const double fp = (*flows.path_flows)[p];
        if (fp != 0.0)
            parts.incentive_term += fp * incentives.total_path_offset(table.path(p), p);
    }
    return parts;
}

double base_social_cost(const Network& net, const FlowAssignment& flows) {
    double c = 0.0;
    for (int e = 0; e < net.num_edges(); ++e)
        c += net.edge(e).cost.value(flows.edge_flows[e]) * flows.edge_flows[e];
    for (int v = 0; v < net.num_nodes(); ++v) {
        const auto& n = net.node(v);
        if (n.role == NodeRole::Intersection && flows.node_flows[v] > 0.0)
            c += n.base_cost.value(flows.node_flows[v]) * flows.node_flows[v];
    }
    if (!net.groups().empty()) {
        Eigen::VectorXd gf = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(net.groups().size()));
        for (int e = 0; e < net.num_edges(); ++e)
            if (net.edge(e).group >= 0) gf[net.edge(e).group] += flows.edge_flows[e];
        for (size_t g = 0; g < net.groups().size(); ++g)
            c += net.groups()[g].cost.value(gf[static_cast<Eigen::Index>(g)]) *
                 gf[static_cast<Eigen::Index>(g)];
    }
    return c;
}

}  // namespace wardrop
