// Copyright (c) tfstatus contributors.
// SPDX-License-Identifier: Apache-2.0
#include "tfstatus/status_engine.hpp"

#include <json.hpp>

#include "tfstatus/error.hpp"

namespace tfstatus {

namespace {

FiniteGraph::Index zero_node(const TransfiniteGraph& g, const ReplacementResult& r,
                             std::string_view id) {
    if (const auto* x = g.find_mu_node(id)) {
        const auto it = r.node_of_mu_node.find(x->id);
        if (it == r.node_of_mu_node.end()) {
            throw Error(ErrorKind::no_path_distance,
                        "singleton mu-node '" + x->id + "' has no path-based distances");
        }
        return it->second;
    }
    if (const auto* s = g.section_of_internal(id)) {
        if (!s->find_internal(id)->nonsingleton) {
            throw Error(ErrorKind::no_path_distance,
                        "singleton node '" + std::string(id) + "' has no path-based distances");
        }
        return r.node_of_section.at(s->id);
    }
    throw Error(ErrorKind::unknown_node, "unknown node '" + std::string(id) + "'");
}

std::uint64_t hops(const Distances& dist, FiniteGraph::Index to) {
    if (!dist.at(to)) {
        throw Error(ErrorKind::disconnected, "replacement graph is disconnected");
    }
    return *dist[to];
}

std::vector<std::string> achieving(const std::vector<StatusEntry>& nodes, const Ordinal& bound) {
    std::vector<std::string> out;
    for (const auto& e : nodes) {
        if (compare(e.status, bound) == std::strong_ordering::equal) {
            out.push_back(e.id);
        }
    }
    return out;
}

} // namespace

Ordinal mu_distance(const TransfiniteGraph& g, const ReplacementResult& r, std::string_view a,
                    std::string_view b) {
    const auto u = zero_node(g, r, a);
    const auto v = zero_node(g, r, b);
    return omega_term(g.rank, hops(bfs_distances(r.graph, u), v));
}

AbstractPath geodesic(const TransfiniteGraph& g, const ReplacementResult& r, std::string_view a,
                      std::string_view b) {
    auto u = zero_node(g, r, a);
    const auto v = zero_node(g, r, b);
    if (u == v) {
        throw Error(ErrorKind::invalid_path,
                    "geodesic endpoints '" + std::string(a) + "' and '" + std::string(b) +
                        "' coincide in the replacement graph");
    }
    const auto to_target = bfs_distances(r.graph, v);
    auto remaining = hops(to_target, u);

    AbstractPath path;
    path.elements.push_back(r.source_of_node[u].id);
    while (remaining > 0) {
        std::optional<FiniteGraph::Index> best;
        for (const auto w : r.graph.neighbors(u)) {
            if (to_target[w] == remaining - 1 && (!best || r.graph.id(w) < r.graph.id(*best))) {
                best = w;
            }
        }
        u = *best;
        --remaining;
        path.elements.push_back(r.source_of_node[u].id);
    }
    return path;
}

Ordinal mu_status(const TransfiniteGraph& g, const ReplacementResult& r, std::string_view x) {
    const auto* node = g.find_mu_node(x);
    if (node != nullptr && !node->nonsingleton()) {
        throw Error(ErrorKind::no_path_distance,
                    "statuses are defined only for nonsingleton nodes; '" + node->id +
                        "' is a singleton");
    }
    const auto dist = bfs_distances(r.graph, zero_node(g, r, x));

    Ordinal sum;
    for (const auto& y : g.mu_nodes) {
        if (y.nonsingleton()) {
            sum = add(sum, omega_term(g.rank, hops(dist, r.node_of_mu_node.at(y.id))));
        }
    }
    for (const auto& s : g.sections) {
        sum = add(sum, omega_term(g.rank, hops(dist, r.node_of_section.at(s.id))));
    }
    for (const auto& y : g.mu_nodes) {
        if (!y.nonsingleton()) {
            if (const auto it = r.node_of_mu_node.find(y.id); it != r.node_of_mu_node.end()) {
                sum = add(sum, omega_term(g.rank, hops(dist, it->second)));
            }
        }
    }
    return sum;
}

MuBounds mu_status_bounds(const TransfiniteGraph& g, const ReplacementResult& r) {
    const auto finite = status_bounds(r.graph);
    return {omega_term(g.rank, finite.lower), omega_term(g.rank, finite.upper), finite.p, finite.q};
}

std::string_view to_string(NodeKind kind) {
    switch (kind) {
    case NodeKind::mu_node: return "mu-node";
    case NodeKind::section_representative: return "section-representative";
    case NodeKind::included_singleton: return "included-singleton";
    case NodeKind::node: return "node";
    }
    return "node";
}

StatusReport status_report(const TransfiniteGraph& g, bool walk_based) {
    const auto r = build_replacement(g, walk_based);
    const auto bounds = mu_status_bounds(g, r);

    StatusReport report;
    report.rank = g.rank;
    report.p = bounds.p;
    report.q = bounds.q;
    report.lower = bounds.lower;
    report.upper = bounds.upper;
    for (const auto& x : g.mu_nodes) {
        if (x.nonsingleton()) {
            report.nodes.push_back({x.id, NodeKind::mu_node, mu_status(g, r, x.id)});
        } else if (r.node_of_mu_node.contains(x.id)) {
            report.included_singletons.push_back(x.id);
        }
    }
    for (const auto& s : g.sections) {
        report.nodes.push_back(
            {s.representative, NodeKind::section_representative, mu_status(g, r, s.representative)});
    }
    report.achieved_lower = achieving(report.nodes, report.lower);
    report.achieved_upper = achieving(report.nodes, report.upper);
    return report;
}

StatusReport status_report(const FiniteGraph& g) {
    const auto bounds = status_bounds(g);
    StatusReport report;
    report.rank = 0;
    report.p = bounds.p;
    report.q = bounds.q;
    report.lower = Ordinal(bounds.lower);
    report.upper = Ordinal(bounds.upper);
    for (FiniteGraph::Index v = 0; v < g.node_count(); ++v) {
        report.nodes.push_back({g.id(v), NodeKind::node, Ordinal(status(g, v))});
    }
    report.achieved_lower = achieving(report.nodes, report.lower);
    report.achieved_upper = achieving(report.nodes, report.upper);
    return report;
}

std::string to_json(const StatusReport& report) {
    nlohmann::ordered_json root;
    root["rank"] = report.rank;
    root["p"] = report.p;
    root["q"] = report.q;
    root["lower"] = format(report.lower);
    root["upper"] = format(report.upper);
    auto nodes = nlohmann::ordered_json::array();
    for (const auto& e : report.nodes) {
        nlohmann::ordered_json entry;
        entry["id"] = e.id;
        entry["kind"] = to_string(e.kind);
        entry["status"] = format(e.status);
        nodes.push_back(std::move(entry));
    }
    root["nodes"] = std::move(nodes);
    root["achieved_lower"] = report.achieved_lower;
    root["achieved_upper"] = report.achieved_upper;
    if (!report.included_singletons.empty()) {
        root["included_singletons"] = report.included_singletons;
    }
    return root.dump(2) + "\n";
}

namespace {

std::string joined(const std::vector<std::string>& ids) {
    if (ids.empty()) {
        return "(none)";
    }
    std::string out;
    for (const auto& id : ids) {
        out += (out.empty() ? "" : ", ") + id;
    }
    return out;
}

} // namespace

std::string to_text(const StatusReport& report) {
    std::string out;
    out += "rank: " + std::to_string(report.rank) + "\n";
    out += "p: " + std::to_string(report.p) + "\n";
    out += "q: " + std::to_string(report.q) + "\n";
    out += "lower: " + format(report.lower) + "\n";
    out += "upper: " + format(report.upper) + "\n";
    if (!report.included_singletons.empty()) {
        out += "included singletons: " + joined(report.included_singletons) + "\n";
    }
    out += "statuses:\n";
    for (const auto& e : report.nodes) {
        out += "  " + e.id + " (" + std::string(to_string(e.kind)) + "): " + format(e.status) + "\n";
    }
    out += "achieved lower: " + joined(report.achieved_lower) + "\n";
    out += "achieved upper: " + joined(report.achieved_upper) + "\n";
    return out;
}

} // namespace tfstatus
