#include "wardrop/incentives.hpp"

#include <algorithm>
#include <stdexcept>

namespace wardrop {

IncentiveSchedule::IncentiveSchedule(IncentiveMode mode, std::vector<IncentiveKey> keys,
                                     Eigen::VectorXd lower, Eigen::VectorXd upper)
    : mode_(mode), keys_(std::move(keys)), lower_(std::move(lower)), upper_(std::move(upper)) {
    if (lower_.size() != static_cast<Eigen::Index>(keys_.size()) ||
        upper_.size() != static_cast<Eigen::Index>(keys_.size()))
        throw std::invalid_argument("incentive bounds size mismatch");
    if (!std::is_sorted(keys_.begin(), keys_.end()))
        std::sort(keys_.begin(), keys_.end());
    for (int i = 0; i < static_cast<int>(keys_.size()); ++i) {
        if (lower_[i] > upper_[i]) throw std::invalid_argument("incentive bounds inverted");
        index_[keys_[static_cast<size_t>(i)]] = i;
    }
    if (index_.size() != keys_.size()) throw std::invalid_argument("duplicate incentive key");
    values_ = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(keys_.size()));
    // 0 must always be admissible (no intervention).
    for (int i = 0; i < values_.size(); ++i)
        if (lower_[i] > 0.0 || upper_[i] < 0.0)
            throw std::invalid_argument("incentive bounds must contain zero");
}

double node_cost_floor(const Network& net, int node) {
    const auto& n = net.node(node);
    if (n.role != NodeRole::Intersection) return 0.0;
    return n.base_cost.value(0.0);
}

IncentiveSchedule IncentiveSchedule::per_path(const Network& net, const PathTable& table,
                                              double lower, double upper) {
    std::vector<IncentiveKey> keys;
    std::vector<double> lo, hi;
    for (int p = 0; p < table.num_paths(); ++p) {
        for (int v : table.path(p).intermediate_nodes) {
            if (net.node(v).role != NodeRole::Intersection) continue;
            keys.push_back({v, p, -1});
            lo.push_back(std::max(lower, -node_cost_floor(net, v)));
            hi.push_back(upper);
        }
    }
    Eigen::VectorXd l = Eigen::Map<Eigen::VectorXd>(lo.data(), static_cast<Eigen::Index>(lo.size()));
    Eigen::VectorXd u = Eigen::Map<Eigen::VectorXd>(hi.data(), static_cast<Eigen::Index>(hi.size()));
    return IncentiveSchedule(IncentiveMode::PerPath, std::move(keys), std::move(l), std::move(u));
}

IncentiveSchedule IncentiveSchedule::per_turn(const Network& net, double lower, double upper,
                                              bool allow_uturns) {
    std::vector<IncentiveKey> keys;
    std::vector<double> lo, hi;
    for (int v = 0; v < net.num_nodes(); ++v) {
        if (net.node(v).role != NodeRole::Intersection) continue;
        for (int ein : net.in_edges(v)) {
            for (int eout : net.out_edges(v)) {
                if (!allow_uturns && net.edge(eout).head == net.edge(ein).tail) continue;
                keys.push_back({v, ein, eout});
                lo.push_back(std::max(lower, -node_cost_floor(net, v)));
                hi.push_back(upper);
            }
        }
    }
    Eigen::VectorXd l = Eigen::Map<Eigen::VectorXd>(lo.data(), static_cast<Eigen::Index>(lo.size()));
    Eigen::VectorXd u = Eigen::Map<Eigen::VectorXd>(hi.data(), static_cast<Eigen::Index>(hi.size()));
    return IncentiveSchedule(IncentiveMode::PerTurn, std::move(keys), std::move(l), std::move(u));
}

void IncentiveSchedule::set_values(const Eigen::VectorXd& values) {
    if (values.size() != values_.size()) throw std::invalid_argument("incentive value size mismatch");
    for (int i = 0; i < values.size(); ++i)
        if (values[i] < lower_[i] - 1e-12 || values[i] > upper_[i] + 1e-12)
            throw std::invalid_argument("incentive value outside bounds");
    values_ = values;
}

Eigen::VectorXd IncentiveSchedule::clip(const Eigen::VectorXd& values) const {
    return values.cwiseMax(lower_).cwiseMin(upper_);
}

int IncentiveSchedule::key_index(const IncentiveKey& k) const {
    auto it = index_.find(k);
    return it == index_.end() ? -1 : it->second;
}

double IncentiveSchedule::path_offset(int node, int path_flat) const {
    if (mode_ != IncentiveMode::PerPath) throw std::logic_error("schedule is not per-path");
    const int i = key_index({node, path_flat, -1});
    return i < 0 ? 0.0 : values_[i];
}

double IncentiveSchedule::turn_offset(int node, int in_edge, int out_edge) const {
    if (mode_ != IncentiveMode::PerTurn) throw std::logic_error("schedule is not per-turn");
    const int i = key_index({node, in_edge, out_edge});
    return i < 0 ? 0.0 : values_[i];
}

double IncentiveSchedule::total_path_offset(const Path& p, int path_flat) const {
    double total = 0.0;
    if (mode_ == IncentiveMode::PerPath) {
        for (int v : p.intermediate_nodes) {
            const int i = key_index({v, path_flat, -1});
            if (i >= 0) total += values_[i];
        }
    } else {
        for (size_t s = 0; s + 1 < p.edges.size(); ++s) {
            const int i = key_index({p.nodes[s + 1], p.edges[s], p.edges[s + 1]});
            if (i >= 0) total += values_[i];
        }
    }
    return total;
}

void check_incentives_feasible(const Network& net, const IncentiveSchedule& s) {
    for (int i = 0; i < s.size(); ++i) {
        const auto& k = s.keys()[static_cast<size_t>(i)];
        const double floor = -node_cost_floor(net, k.node);
        if (s.lower()[i] < floor - 1e-12)
            throw std::invalid_argument("incentive lower bound below admissible advancement at node " +
                                        net.node(k.node).id);
        if (s.values()[i] < s.lower()[i] - 1e-12 || s.values()[i] > s.upper()[i] + 1e-12)
            throw std::invalid_argument("incentive value outside bounds");
    }
}

}  // namespace wardrop
