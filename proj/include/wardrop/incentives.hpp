#pragma once

#include <Eigen/Core>
#include <map>
#include <tuple>
#include <vector>

#include "wardrop/network.hpp"
#include "wardrop/paths.hpp"

namespace wardrop {

enum class IncentiveMode { PerPath, PerTurn };

/// Key of one additive timestamp offset. PerPath: (node, flat path index).
/// PerTurn: (node, in edge, out edge) movement.
struct IncentiveKey {
    int node = -1;
    int a = -1;  // path index (PerPath) or in-edge index (PerTurn)
    int b = -1;  // -1 (PerPath) or out-edge index (PerTurn)
    friend bool operator<(const IncentiveKey& x, const IncentiveKey& y) {
        return std::tie(x.node, x.a, x.b) < std::tie(y.node, y.a, y.b);
    }
    friend bool operator==(const IncentiveKey& x, const IncentiveKey& y) {
        return std::tie(x.node, x.a, x.b) == std::tie(y.node, y.a, y.b);
    }
};

/// Bounded additive offsets on intersection traversal times. Offsets for keys
/// not present read as zero. Every stored value must lie inside its per-key
/// bounds; the lower bound may not drop the total node cost below zero, so it
/// is clamped at -(minimum base cost) per node.
class IncentiveSchedule {
public:
    IncentiveSchedule() = default;
    IncentiveSchedule(IncentiveMode mode, std::vector<IncentiveKey> keys,
                      Eigen::VectorXd lower, Eigen::VectorXd upper);

    /// One key per (intersection, path traversing it as intermediate).
    static IncentiveSchedule per_path(const Network& net, const PathTable& table, double lower,
                                      double upper);
    /// One key per feasible (in edge, intersection, out edge) movement.
    static IncentiveSchedule per_turn(const Network& net, double lower, double upper,
                                      bool allow_uturns = false);

    IncentiveMode mode() const { return mode_; }
    int size() const { return static_cast<int>(keys_.size()); }
    const std::vector<IncentiveKey>& keys() const { return keys_; }
    const Eigen::VectorXd& values() const { return values_; }
    const Eigen::VectorXd& lower() const { return lower_; }
    const Eigen::VectorXd& upper() const { return upper_; }

    void set_values(const Eigen::VectorXd& values);  // throws if out of bounds
    Eigen::VectorXd clip(const Eigen::VectorXd& values) const;
    void set_values_clipped(const Eigen::VectorXd& values) { set_values(clip(values)); }

    /// Offset seen by `path` (flat index) at `node`; 0 when no key matches.
    double path_offset(int node, int path_flat) const;
    /// Offset of the (in_edge, node, out_edge) movement; 0 when absent.
    double turn_offset(int node, int in_edge, int out_edge) const;
    /// Total offset along a path: sum over its intermediate intersections.
    double total_path_offset(const Path& p, int path_flat) const;

    int key_index(const IncentiveKey& k) const;  // -1 if absent

private:
    IncentiveMode mode_ = IncentiveMode::PerPath;
    std::vector<IncentiveKey> keys_;  // sorted
    Eigen::VectorXd values_, lower_, upper_;
    std::map<IncentiveKey, int> index_;
};

/// Minimum of a node's base cost over its operating domain (the admissible
/// advancement magnitude); base costs are non-decreasing so this is the value
/// at zero flow.
double node_cost_floor(const Network& net, int node);

/// Tightens uniform bounds [lower, upper] to per-key feasibility and throws
/// if a stored value escapes them.
void check_incentives_feasible(const Network& net, const IncentiveSchedule& s);

}  // namespace wardrop
