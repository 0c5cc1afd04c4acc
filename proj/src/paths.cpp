#include "wardrop/paths.hpp"

#include <algorithm>
#include <stdexcept>

#include "wardrop/shortest_path.hpp"

namespace wardrop {

namespace {

struct DfsState {
    const Network& net;
    int destination;
    double cost_bound;  // on zero-flow path cost, inf if unused
    int max_paths;
    std::vector<char> visited;
    std::vector<int> node_stack;
    std::vector<int> edge_stack;
    std::vector<Path>* out;
    bool truncated = false;

    void run(int node, double cost_so_far) {
        if (node == destination) {
            if (static_cast<int>(out->size()) >= max_paths) {
                truncated = true;
                return;
            }
            Path p;
            p.nodes = node_stack;
            p.edges = edge_stack;
            if (p.nodes.size() > 2)
                p.intermediate_nodes.assign(p.nodes.begin() + 1, p.nodes.end() - 1);
            out->push_back(std::move(p));
            return;
        }
        // out_edges are ordered by head id, so paths come out lexicographic.
        for (int ei : net.out_edges(node)) {
            if (truncated) return;
            const auto& e = net.edge(ei);
            if (visited[static_cast<size_t>(e.head)]) continue;
            const double step = e.cost.value(0.0) + node_zero_cost(e.head);
            if (cost_so_far + step > cost_bound) continue;
            visited[static_cast<size_t>(e.head)] = 1;
            node_stack.push_back(e.head);
            edge_stack.push_back(ei);
            run(e.head, cost_so_far + step);
            edge_stack.pop_back();
            node_stack.pop_back();
            visited[static_cast<size_t>(e.head)] = 0;
        }
    }

    double node_zero_cost(int v) const {
        if (v == destination) return 0.0;  // terminals of the path carry no node cost
        const auto& n = net.node(v);
        return n.role == NodeRole::Intersection ? n.base_cost.value(0.0) : 0.0;
    }
};

}  // namespace

PathSet enumerate_paths(const Network& net, int od_index, const EnumerateLimits& limits) {
    if (od_index < 0 || od_index >= static_cast<int>(net.demands().size()))
        throw std::invalid_argument("od_index out of range");
    const auto& d = net.demands()[static_cast<size_t>(od_index)];

    double bound = std::numeric_limits<double>::infinity();
    if (std::isfinite(limits.max_cost_factor)) {
        const auto sp = zero_flow_shortest_cost(net, d.origin, d.destination);
        if (!sp) throw std::runtime_error("OD pair is not connected");
        bound = limits.max_cost_factor * *sp + 1e-12;
    }

    PathSet set;
    set.od_index = od_index;
    DfsState st{net, d.destination, bound, limits.max_paths,
                std::vector<char>(static_cast<size_t>(net.num_nodes()), 0),
                {}, {}, &set.paths};
    st.visited[static_cast<size_t>(d.origin)] = 1;
    st.node_stack.push_back(d.origin);
    st.run(d.origin, 0.0);
    set.truncated = st.truncated;
    if (set.paths.empty() && d.amount > 0.0)
        throw std::runtime_error("no path found for positive-demand OD pair");
    return set;
}

PathTable::PathTable(std::vector<PathSet> sets) : sets_(std::move(sets)) {
    offsets_.reserve(sets_.size());
    for (const auto& s : sets_) {
        offsets_.push_back(total_);
        for (size_t i = 0; i < s.paths.size(); ++i) od_of_.push_back(s.od_index);
        total_ += static_cast<int>(s.paths.size());
    }
}

PathTable PathTable::enumerate(const Network& net, const EnumerateLimits& limits) {
    std::vector<PathSet> sets;
    sets.reserve(net.demands().size());
    for (int od = 0; od < static_cast<int>(net.demands().size()); ++od)
        sets.push_back(enumerate_paths(net, od, limits));
    return PathTable(std::move(sets));
}

const Path& PathTable::path(int flat) const {
    for (size_t od = 0; od < sets_.size(); ++od) {
        const int off = offsets_[od];
        if (flat < off + static_cast<int>(sets_[od].paths.size()))
            return sets_[od].paths[static_cast<size_t>(flat - off)];
    }
    throw std::out_of_range("path index out of range");
}

std::pair<int, int> PathTable::od_range(int od) const {
    const int first = offsets_[static_cast<size_t>(od)];
    return {first, first + static_cast<int>(sets_[static_cast<size_t>(od)].paths.size())};
}

void check_path_valid(const Network& net, const Path& p) {
    if (p.nodes.size() < 2 || p.edges.size() + 1 != p.nodes.size())
        throw std::invalid_argument("malformed path");
    std::vector<char> seen(static_cast<size_t>(net.num_nodes()), 0);
    for (size_t i = 0; i < p.edges.size(); ++i) {
        const int ei = p.edges[i];
        if (ei < 0 || ei >= net.num_edges()) throw std::invalid_argument("unknown edge on path");
        const auto& e = net.edge(ei);
        if (e.tail != p.nodes[i] || e.head != p.nodes[i + 1])
            throw std::invalid_argument("path edge does not connect its nodes");
    }
    for (int v : p.nodes) {
        if (v < 0 || v >= net.num_nodes()) throw std::invalid_argument("unknown node on path");
        if (seen[static_cast<size_t>(v)]) throw std::invalid_argument("path repeats a node");
        seen[static_cast<size_t>(v)] = 1;
    }
}

}  // namespace wardrop
