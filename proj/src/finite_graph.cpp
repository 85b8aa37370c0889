// Copyright (c) tfstatus contributors.
// SPDX-License-Identifier: Apache-2.0
#include "tfstatus/finite_graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>

#include "tfstatus/error.hpp"

namespace tfstatus {

FiniteGraph::FiniteGraph(std::vector<std::string> nodes,
                         const std::vector<std::pair<std::string, std::string>>& edges) {
    for (auto& id : nodes) {
        add_node(std::move(id));
    }
    for (const auto& [a, b] : edges) {
        const auto u = find(a);
        const auto v = find(b);
        if (!u || !v) {
            throw Error(ErrorKind::dangling_reference,
                        "edge (" + a + ", " + b + ") has an undeclared endpoint");
        }
        add_edge(*u, *v);
    }
}

std::optional<FiniteGraph::Index> FiniteGraph::find(std::string_view id) const {
    const auto it = index_.find(std::string(id));
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

FiniteGraph::Index FiniteGraph::index_of(std::string_view id) const {
    if (const auto v = find(id)) {
        return *v;
    }
    throw Error(ErrorKind::unknown_node, "unknown node '" + std::string(id) + "'");
}

bool FiniteGraph::has_edge(Index u, Index v) const {
    const auto& adj = adjacency_.at(u);
    return std::find(adj.begin(), adj.end(), v) != adj.end();
}

FiniteGraph::Index FiniteGraph::add_node(std::string id) {
    if (index_.contains(id)) {
        throw Error(ErrorKind::duplicate_identifier, "duplicate node id '" + id + "'");
    }
    const Index v = nodes_.size();
    index_.emplace(id, v);
    nodes_.push_back(std::move(id));
    adjacency_.emplace_back();
    return v;
}

void FiniteGraph::add_edge(Index u, Index v) {
    if (u >= nodes_.size() || v >= nodes_.size()) {
        throw Error(ErrorKind::dangling_reference, "edge endpoint out of range");
    }
    if (u == v) {
        throw Error(ErrorKind::invalid_graph, "self-loop at '" + nodes_[u] + "'");
    }
    if (has_edge(u, v)) {
        throw Error(ErrorKind::invalid_graph,
                    "duplicate edge (" + nodes_[u] + ", " + nodes_[v] + ")");
    }
    edges_.emplace_back(std::min(u, v), std::max(u, v));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
}

FiniteGraph build_graph(std::vector<std::string> nodes,
                        const std::vector<std::pair<std::string, std::string>>& edges) {
    return FiniteGraph(std::move(nodes), edges);
}

Distances bfs_distances(const FiniteGraph& g, FiniteGraph::Index source) {
    if (source >= g.node_count()) {
        throw Error(ErrorKind::unknown_node, "BFS source out of range");
    }
    Distances dist(g.node_count());
    std::deque<FiniteGraph::Index> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        const auto u = queue.front();
        queue.pop_front();
        for (const auto v : g.neighbors(u)) {
            if (!dist[v]) {
                dist[v] = *dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

Distances bfs_distances(const FiniteGraph& g, std::string_view source) {
    return bfs_distances(g, g.index_of(source));
}

bool is_connected(const FiniteGraph& g) {
    if (g.node_count() <= 1) {
        return true;
    }
    const auto dist = bfs_distances(g, FiniteGraph::Index{0});
    return std::all_of(dist.begin(), dist.end(), [](const auto& d) { return d.has_value(); });
}

std::uint64_t status(const FiniteGraph& g, FiniteGraph::Index x) {
    std::uint64_t sum = 0;
    for (const auto& d : bfs_distances(g, x)) {
        if (!d) {
            throw Error(ErrorKind::disconnected, "status requires a connected graph");
        }
        sum += *d;
    }
    return sum;
}

std::uint64_t status(const FiniteGraph& g, std::string_view x) { return status(g, g.index_of(x)); }

BoundsResult bounds_for(std::uint64_t p, std::uint64_t q) {
    if (p == 0) {
        throw Error(ErrorKind::out_of_range, "status bounds need at least one node");
    }
    const std::uint64_t top = (p - 1) * (p + 2) / 2;
    if (q > top) {
        throw Error(ErrorKind::out_of_range, "edge count exceeds (p-1)(p+2)/2");
    }
    return {p, q, p - 1, top - q};
}

BoundsResult status_bounds(const FiniteGraph& g) {
    if (g.node_count() == 0 || !is_connected(g)) {
        throw Error(ErrorKind::disconnected, "status bounds require a connected, nonempty graph");
    }
    return bounds_for(g.node_count(), g.edge_count());
}

// -- enumeration ------------------------------------------------------------

namespace {

void check_order(std::size_t p) {
    if (p < 1 || p > max_enumeration_order) {
        throw Error(ErrorKind::out_of_range,
                    "graph order must lie in 1.." + std::to_string(max_enumeration_order));
    }
}

// Connectivity straight from the mask, without building a FiniteGraph.
bool mask_connected(std::size_t p, std::uint64_t mask, const std::vector<FiniteGraph::Edge>& pairs) {
    std::uint32_t adjacent[max_enumeration_order] = {};
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (mask >> k & 1U) {
            adjacent[pairs[k].first] |= 1U << pairs[k].second;
            adjacent[pairs[k].second] |= 1U << pairs[k].first;
        }
    }
    std::uint32_t seen = 1;
    std::uint32_t frontier = 1;
    while (frontier != 0) {
        std::uint32_t next = 0;
        for (std::size_t v = 0; v < p; ++v) {
            if (frontier >> v & 1U) {
                next |= adjacent[v];
            }
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (1U << p) - 1;
}

} // namespace

std::size_t pair_count(std::size_t p) { return p * (p - 1) / 2; }

std::vector<FiniteGraph::Edge> pair_order(std::size_t p) {
    std::vector<FiniteGraph::Edge> pairs;
    pairs.reserve(pair_count(p));
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = i + 1; j < p; ++j) {
            pairs.emplace_back(i, j);
        }
    }
    return pairs;
}

FiniteGraph graph_from_mask(std::size_t p, std::uint64_t mask) {
    check_order(p);
    FiniteGraph g;
    for (std::size_t v = 0; v < p; ++v) {
        g.add_node("v" + std::to_string(v + 1));
    }
    const auto pairs = pair_order(p);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (mask >> k & 1U) {
            g.add_edge(pairs[k].first, pairs[k].second);
        }
    }
    return g;
}

std::uint64_t for_each_connected_graph(std::size_t p, std::uint64_t first_mask,
                                       std::uint64_t last_mask,
                                       const std::function<void(const FiniteGraph&)>& visit) {
    check_order(p);
    const auto pairs = pair_order(p);
    last_mask = std::min<std::uint64_t>(last_mask, std::uint64_t{1} << pairs.size());
    std::uint64_t visited = 0;
    for (std::uint64_t mask = first_mask; mask < last_mask; ++mask) {
        if (mask_connected(p, mask, pairs)) {
            visit(graph_from_mask(p, mask));
            ++visited;
        }
    }
    return visited;
}

std::uint64_t for_each_connected_graph(std::size_t p,
                                       const std::function<void(const FiniteGraph&)>& visit) {
    return for_each_connected_graph(p, 0, ~std::uint64_t{0}, visit);
}

ConnectedGraphStream::ConnectedGraphStream(std::size_t p) : p_(p) {
    check_order(p);
    end_ = std::uint64_t{1} << pair_count(p);
}

std::optional<FiniteGraph> ConnectedGraphStream::next() {
    const auto pairs = pair_order(p_);
    while (mask_ < end_) {
        const auto mask = mask_++;
        if (mask_connected(p_, mask, pairs)) {
            return graph_from_mask(p_, mask);
        }
    }
    return std::nullopt;
}

std::vector<FiniteGraph> enumerate_connected_graphs(std::size_t p) {
    std::vector<FiniteGraph> out;
    for_each_connected_graph(p, [&](const FiniteGraph& g) { out.push_back(g); });
    return out;
}

ExtremalResult extremal_search(std::size_t p, std::size_t q) {
    check_order(p);
    if (q + 1 < p || q > pair_count(p)) {
        throw Error(ErrorKind::out_of_range,
                    "edge count " + std::to_string(q) + " outside [p-1, p(p-1)/2] for p = " +
                        std::to_string(p));
    }
    const auto bounds = bounds_for(p, q);
    const auto pairs = pair_order(p);
    std::optional<Witness> lower;
    std::optional<Witness> upper;
    const std::uint64_t end = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < end && !(lower && upper); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != q || !mask_connected(p, mask, pairs)) {
            continue;
        }
        const auto g = graph_from_mask(p, mask);
        for (FiniteGraph::Index v = 0; v < p; ++v) {
            const auto s = status(g, v);
            if (!lower && s == bounds.lower) {
                lower = Witness{g, g.id(v), s};
            }
            if (!upper && s == bounds.upper) {
                upper = Witness{g, g.id(v), s};
            }
        }
    }
    if (!lower || !upper) {
        throw Error(ErrorKind::no_witness, "no extremal witness found for p = " +
                                               std::to_string(p) + ", q = " + std::to_string(q));
    }
    return {bounds, std::move(*lower), std::move(*upper)};
}

EjsTally verify_ejs_bounds(std::size_t p) {
    EjsTally tally{p, 0, 0, 0};
    tally.graphs = for_each_connected_graph(p, [&](const FiniteGraph& g) {
        const auto bounds = status_bounds(g);
        for (FiniteGraph::Index v = 0; v < g.node_count(); ++v) {
            const auto s = status(g, v);
            ++tally.nodes;
            if (s < bounds.lower || s > bounds.upper) {
                ++tally.violations;
            }
        }
    });
    return tally;
}

// -- DOT --------------------------------------------------------------------

namespace {

std::string quoted(const std::string& id) {
    std::string out = "\"";
    for (const char c : id) {
        if (c == '"' || c == '\\') {
            out += '\\';
        }
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string to_dot(const FiniteGraph& g) {
    std::string out = "graph {\n";
    for (const auto& id : g.nodes()) {
        out += "  " + quoted(id) + ";\n";
    }
    auto edges = g.edges();
    std::sort(edges.begin(), edges.end());
    for (const auto& [u, v] : edges) {
        out += "  " + quoted(g.id(u)) + " -- " + quoted(g.id(v)) + ";\n";
    }
    out += "}\n";
    return out;
}

} // namespace tfstatus
