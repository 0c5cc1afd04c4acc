#include "wardrop/network.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace wardrop {

namespace {
bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}
}  // namespace

bool node_id_less(const std::string& a, const std::string& b) {
    const bool na = all_digits(a), nb = all_digits(b);
    if (na && nb) {
        if (a.size() != b.size()) return a.size() < b.size();  // no leading zeros assumed
        return a < b;
    }
    if (na != nb) return na;
    return a < b;
}

Network::Network(std::vector<NodeSpec> nodes, std::vector<EdgeSpec> edges,
                 std::vector<Demand> demands, std::vector<SharedGroup> groups)
    : groups_(std::move(groups)) {
    if (nodes.empty()) throw std::invalid_argument("network needs at least one node");

    // Canonical node order; remap indices used by edges/demands.
    std::vector<int> order(nodes.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return node_id_less(nodes[static_cast<size_t>(x)].id,
                                                      nodes[static_cast<size_t>(y)].id); });
    std::vector<int> remap(nodes.size());
    nodes_.reserve(nodes.size());
    for (size_t pos = 0; pos < order.size(); ++pos) {
        remap[static_cast<size_t>(order[pos])] = static_cast<int>(pos);
        nodes_.push_back(std::move(nodes[static_cast<size_t>(order[pos])]));
    }
    for (size_t i = 0; i + 1 < nodes_.size(); ++i)
        if (nodes_[i].id == nodes_[i + 1].id)
            throw std::invalid_argument("duplicate node id: " + nodes_[i].id);
    for (size_t i = 0; i < nodes_.size(); ++i) index_[nodes_[i].id] = static_cast<int>(i);

    auto map_node = [&](int idx) {
        if (idx < 0 || idx >= static_cast<int>(remap.size()))
            throw std::invalid_argument("edge or demand references unknown node index");
        return remap[static_cast<size_t>(idx)];
    };
    for (auto& e : edges) {
        e.tail = map_node(e.tail);
        e.head = map_node(e.head);
    }
    for (auto& d : demands) {
        d.origin = map_node(d.origin);
        d.destination = map_node(d.destination);
    }

    // Canonical edge order by (tail id, head id, original position).
    std::vector<int> eorder(edges.size());
    std::iota(eorder.begin(), eorder.end(), 0);
    std::stable_sort(eorder.begin(), eorder.end(), [&](int x, int y) {
        const auto& a = edges[static_cast<size_t>(x)];
        const auto& b = edges[static_cast<size_t>(y)];
        if (a.tail != b.tail) return a.tail < b.tail;
        return a.head < b.head;
    });
    edges_.reserve(edges.size());
    for (int idx : eorder) edges_.push_back(std::move(edges[static_cast<size_t>(idx)]));

    std::stable_sort(demands.begin(), demands.end(), [](const Demand& a, const Demand& b) {
        if (a.origin != b.origin) return a.origin < b.origin;
        return a.destination < b.destination;
    });
    demands_ = std::move(demands);

    out_edges_.assign(nodes_.size(), {});
    in_edges_.assign(nodes_.size(), {});
    for (size_t i = 0; i < edges_.size(); ++i) {
        out_edges_[static_cast<size_t>(edges_[i].tail)].push_back(static_cast<int>(i));
        in_edges_[static_cast<size_t>(edges_[i].head)].push_back(static_cast<int>(i));
    }
    total_demand_ = 0.0;
    for (const auto& d : demands_) total_demand_ += d.amount;
    validate();
}

Network Network::from_ids(std::vector<NodeSpec> nodes, const std::vector<EdgeById>& edges,
                          const std::vector<DemandById>& demands) {
    std::unordered_map<std::string, int> idx;
    for (size_t i = 0; i < nodes.size(); ++i) idx[nodes[i].id] = static_cast<int>(i);
    auto resolve = [&](const std::string& id) {
        auto it = idx.find(id);
        if (it == idx.end()) throw std::invalid_argument("unknown node id: " + id);
        return it->second;
    };
    std::vector<EdgeSpec> es;
    es.reserve(edges.size());
    for (const auto& e : edges) es.push_back({resolve(e.tail), resolve(e.head), e.cost, -1});
    std::vector<Demand> ds;
    ds.reserve(demands.size());
    for (const auto& d : demands) ds.push_back({resolve(d.origin), resolve(d.destination), d.amount});
    return Network(std::move(nodes), std::move(es), std::move(ds));
}

int Network::node_index(const std::string& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? -1 : it->second;
}

double Network::node_flow_max(int node) const {
    const auto& n = nodes_[static_cast<size_t>(node)];
    if (n.flow_max > 0.0) return n.flow_max;
    return total_demand_ > 0.0 ? total_demand_ : 1.0;
}

void Network::set_edge_cost(int edge, CostFunction cost) {
    edges_[static_cast<size_t>(edge)].cost = std::move(cost);
}

void Network::validate() const {
    for (const auto& e : edges_) {
        if (e.tail == e.head)
            throw std::invalid_argument("self-loop edge at node " + nodes_[static_cast<size_t>(e.tail)].id);
        if (e.group < -1 || e.group >= static_cast<int>(groups_.size()))
            throw std::invalid_argument("edge references unknown group");
    }
    for (const auto& d : demands_) {
        if (d.amount < 0.0) throw std::invalid_argument("negative demand");
        if (d.origin == d.destination)
            throw std::invalid_argument("demand with identical origin and destination");
    }
    for (const auto& n : nodes_) {
        if (n.role == NodeRole::Terminal && !n.base_cost.is_zero())
            throw std::invalid_argument("terminal node " + n.id + " must have zero base cost");
    }
}

void Network::check_demands_routable() const {
    // One BFS per distinct origin.
    std::vector<char> reach(nodes_.size(), 0);
    int last_origin = -1;
    for (const auto& d : demands_) {
        if (d.amount <= 0.0) continue;
        if (d.origin != last_origin) {
            std::fill(reach.begin(), reach.end(), 0);
            std::queue<int> q;
            q.push(d.origin);
            reach[static_cast<size_t>(d.origin)] = 1;
            while (!q.empty()) {
                int u = q.front();
                q.pop();
                for (int ei : out_edges_[static_cast<size_t>(u)]) {
                    int v = edges_[static_cast<size_t>(ei)].head;
                    if (!reach[static_cast<size_t>(v)]) {
                        reach[static_cast<size_t>(v)] = 1;
                        q.push(v);
                    }
                }
            }
            last_origin = d.origin;
        }
        if (!reach[static_cast<size_t>(d.destination)])
            throw std::runtime_error("no path from " + nodes_[static_cast<size_t>(d.origin)].id +
                                     " to " + nodes_[static_cast<size_t>(d.destination)].id);
    }
}

}  // namespace wardrop
