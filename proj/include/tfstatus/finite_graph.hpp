// Copyright (c) tfstatus contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tfstatus {

/// Simple undirected graph with text node identifiers. Nodes and edges keep
/// insertion order; edges are stored with the smaller node index first.
class FiniteGraph {
  public:
    using Index = std::size_t;
    using Edge = std::pair<Index, Index>;

    FiniteGraph() = default;

    /// Throws Error on duplicate ids, undeclared endpoints, self-loops or
    /// duplicate edges.
    FiniteGraph(std::vector<std::string> nodes,
                const std::vector<std::pair<std::string, std::string>>& edges);

    [[nodiscard]] std::size_t node_count() const noexcept { return nodes_.size(); }
    [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
    [[nodiscard]] const std::vector<std::string>& nodes() const noexcept { return nodes_; }
    [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }
    [[nodiscard]] const std::vector<Index>& neighbors(Index v) const { return adjacency_.at(v); }
    [[nodiscard]] std::size_t degree(Index v) const { return adjacency_.at(v).size(); }
    [[nodiscard]] const std::string& id(Index v) const { return nodes_.at(v); }

    [[nodiscard]] std::optional<Index> find(std::string_view id) const;
    /// Like find, but throws Error(unknown_node).
    [[nodiscard]] Index index_of(std::string_view id) const;
    [[nodiscard]] bool has_edge(Index u, Index v) const;

    Index add_node(std::string id);
    void add_edge(Index u, Index v);

  private:
    std::vector<std::string> nodes_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Index>> adjacency_;
    std::unordered_map<std::string, Index> index_;
};

FiniteGraph build_graph(std::vector<std::string> nodes,
                        const std::vector<std::pair<std::string, std::string>>& edges);

/// True iff all nodes are mutually reachable. Empty and one-node graphs are connected.
bool is_connected(const FiniteGraph& g);

/// Hop distances from `source`, aligned with g.nodes(); nullopt marks unreachable.
using Distances = std::vector<std::optional<std::uint64_t>>;
Distances bfs_distances(const FiniteGraph& g, FiniteGraph::Index source);
Distances bfs_distances(const FiniteGraph& g, std::string_view source);

/// Sum of distances from x to every node. Requires a connected graph.
std::uint64_t status(const FiniteGraph& g, FiniteGraph::Index x);
std::uint64_t status(const FiniteGraph& g, std::string_view x);

/// Status bounds of a connected graph with p nodes and q edges:
/// p-1 <= s(x) <= (p-1)(p+2)/2 - q.
struct BoundsResult {
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    std::uint64_t lower = 0;
    std::uint64_t upper = 0;

    friend bool operator==(const BoundsResult&, const BoundsResult&) = default;
};

BoundsResult bounds_for(std::uint64_t p, std::uint64_t q);
BoundsResult status_bounds(const FiniteGraph& g);

// ---------------------------------------------------------------------------
// Exhaustive enumeration of labeled connected graphs.
//
// Graphs on p nodes are indexed by edge masks over the p(p-1)/2 unordered
// pairs, taken in lexicographic order (0,1), (0,2), ..., (p-2,p-1). Nodes are
// named v1..vp. Enumeration visits masks in increasing order, so any
// partition of the mask range visits the same graphs.

inline constexpr std::size_t max_enumeration_order = 7;

std::size_t pair_count(std::size_t p);
std::vector<FiniteGraph::Edge> pair_order(std::size_t p);
FiniteGraph graph_from_mask(std::size_t p, std::uint64_t mask);

/// Calls `visit` for every connected labeled graph whose mask lies in
/// [first_mask, last_mask). Returns the number of graphs visited.
std::uint64_t for_each_connected_graph(std::size_t p, std::uint64_t first_mask,
                                       std::uint64_t last_mask,
                                       const std::function<void(const FiniteGraph&)>& visit);
std::uint64_t for_each_connected_graph(std::size_t p,
                                       const std::function<void(const FiniteGraph&)>& visit);

/// Pull-style stream over the same sequence.
class ConnectedGraphStream {
  public:
    explicit ConnectedGraphStream(std::size_t p);
    std::optional<FiniteGraph> next();

  private:
    std::size_t p_;
    std::uint64_t mask_ = 0;
    std::uint64_t end_;
};

std::vector<FiniteGraph> enumerate_connected_graphs(std::size_t p);

struct Witness {
    FiniteGraph graph;
    std::string node;
    std::uint64_t status = 0;
};

struct ExtremalResult {
    BoundsResult bounds;
    Witness lower;
    Witness upper;
};

/// First graphs (in enumeration order) with p nodes and q edges holding a node
/// of status exactly p-1, respectively exactly (p-1)(p+2)/2 - q.
ExtremalResult extremal_search(std::size_t p, std::size_t q);

/// Outcome of checking the status bounds on every node of every connected
/// labeled graph of one order.
struct EjsTally {
    std::size_t p = 0;
    std::uint64_t graphs = 0;
    std::uint64_t nodes = 0;
    std::uint64_t violations = 0;
};

EjsTally verify_ejs_bounds(std::size_t p);

/// DOT text: one node statement per line in declaration order, then edges
/// sorted by (smaller index, larger index).
std::string to_dot(const FiniteGraph& g);

} // namespace tfstatus
