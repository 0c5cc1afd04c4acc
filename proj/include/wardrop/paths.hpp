#pragma once

#include <vector>

#include "wardrop/network.hpp"

namespace wardrop {

struct Path {
    std::vector<int> nodes;  // origin .. destination
    std::vector<int> edges;  // nodes.size() - 1 entries
    std::vector<int> intermediate_nodes;
};

struct PathSet {
    int od_index = -1;
    std::vector<Path> paths;  // lexicographic by node id sequence
    bool truncated = false;
};

struct EnumerateLimits {
    int max_paths = 1000;
    // Keep only paths with zero-flow cost <= factor * cheapest zero-flow cost.
    double max_cost_factor = std::numeric_limits<double>::infinity();
};

/// All simple origin->destination paths for one OD pair, in lexicographic
/// order of their node-id sequences. Sets `truncated` when max_paths cut the
/// enumeration short.
PathSet enumerate_paths(const Network& net, int od_index, const EnumerateLimits& limits = {});

/// Per-OD path sets plus flat indexing across all ODs (the order used by flow
/// vectors and per-path incentive keys).
class PathTable {
public:
    PathTable() = default;
    explicit PathTable(std::vector<PathSet> sets);
    static PathTable enumerate(const Network& net, const EnumerateLimits& limits = {});

    int num_paths() const { return total_; }
    int num_ods() const { return static_cast<int>(sets_.size()); }
    const PathSet& od_set(int od) const { return sets_[static_cast<size_t>(od)]; }
    const std::vector<PathSet>& sets() const { return sets_; }
    int flat_index(int od, int path_in_od) const {
        return offsets_[static_cast<size_t>(od)] + path_in_od;
    }
    int od_of_path(int flat) const { return od_of_[static_cast<size_t>(flat)]; }
    const Path& path(int flat) const;
    /// [first, last) flat range of an OD's paths.
    std::pair<int, int> od_range(int od) const;

private:
    std::vector<PathSet> sets_;
    std::vector<int> offsets_;
    std::vector<int> od_of_;
    int total_ = 0;
};

/// Checks node/edge consistency of a path within a network; throws on
/// mismatch (edge sequence must connect the node sequence, no repeats).
void check_path_valid(const Network& net, const Path& p);

}  // namespace wardrop
