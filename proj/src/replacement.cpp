// Copyright (c) tfstatus contributors.
// SPDX-License-Identifier: Apache-2.0
#include "tfstatus/replacement.hpp"

#include <algorithm>
#include <set>

#include "tfstatus/error.hpp"

namespace tfstatus {

namespace {

bool is_included_singleton(const TransfiniteGraph& g, const MuNode& x) {
    return !x.nonsingleton() && std::find(g.include_singletons.begin(), g.include_singletons.end(),
                                          x.id) != g.include_singletons.end();
}

} // namespace

ReplacementResult assemble_replacement(const TransfiniteGraph& g) {
    ReplacementResult r;
    r.rank = g.rank;
    for (const auto& x : g.mu_nodes) {
        if (x.nonsingleton()) {
            r.node_of_mu_node.emplace(x.id, r.graph.add_node(x.id));
            r.source_of_node.push_back({ZeroNodeKind::mu_node, x.id});
        }
    }
    for (const auto& s : g.sections) {
        const auto& name = s.representative.empty() ? s.id : s.representative;
        r.node_of_section.emplace(s.id, r.graph.add_node(name));
        r.source_of_node.push_back({ZeroNodeKind::section, s.id});
    }
    for (const auto& x : g.mu_nodes) {
        if (is_included_singleton(g, x)) {
            r.node_of_mu_node.emplace(x.id, r.graph.add_node(x.id));
            r.source_of_node.push_back({ZeroNodeKind::singleton, x.id});
        }
    }

    for (const auto& s : g.sections) {
        const auto center = r.node_of_section.at(s.id);
        for (const auto& x : g.mu_nodes) {
            if (x.nonsingleton() && g.incident(x.id, s.id)) {
                r.graph.add_edge(center, r.node_of_mu_node.at(x.id));
            }
        }
    }
    for (const auto& x : g.mu_nodes) {
        if (is_included_singleton(g, x)) {
            r.graph.add_edge(r.node_of_section.at(x.tips.front().section),
                             r.node_of_mu_node.at(x.id));
        }
    }
    return r;
}

ReplacementResult build_replacement(const TransfiniteGraph& g, bool walk_based) {
    const auto report = validate(g, walk_based);
    if (!report.passed()) {
        const auto& v = report.violations.front();
        throw Error(ErrorKind::validation_failed,
                    "violation [" + v.condition + "]: " + v.message);
    }
    return assemble_replacement(g);
}

std::uint64_t incidence_count(const TransfiniteGraph& g, const AbstractPath& path) {
    const auto& e = path.elements;
    if (e.empty()) {
        throw Error(ErrorKind::invalid_path, "empty path");
    }
    std::set<std::string_view> seen;
    std::uint64_t n = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        const bool is_section = g.find_section(e[i]) != nullptr;
        if (!is_section && g.find_mu_node(e[i]) == nullptr) {
            throw Error(ErrorKind::invalid_path, "path entry '" + e[i] + "' is neither a section nor a mu-node");
        }
        if (!seen.insert(e[i]).second) {
            throw Error(ErrorKind::invalid_path, "path revisits '" + e[i] + "'");
        }
        if (i > 0) {
            const bool prev_section = g.find_section(e[i - 1]) != nullptr;
            if (prev_section == is_section) {
                throw Error(ErrorKind::invalid_path,
                            "path must alternate sections and mu-nodes at '" + e[i] + "'");
            }
            const auto& mu = is_section ? e[i - 1] : e[i];
            const auto& sec = is_section ? e[i] : e[i - 1];
            if (!g.incident(mu, sec)) {
                throw Error(ErrorKind::invalid_path,
                            "mu-node '" + mu + "' is not incident to section '" + sec + "'");
            }
        }
        if (!is_section && e.size() > 1) {
            n += (i == 0 || i + 1 == e.size()) ? 1 : 2;
        }
    }
    return n;
}

Ordinal path_mu_length(const TransfiniteGraph& g, const AbstractPath& path) {
    return omega_term(g.rank, incidence_count(g, path));
}

std::vector<FiniteGraph::Index> translate_path(const ReplacementResult& r, const AbstractPath& path) {
    std::vector<FiniteGraph::Index> out;
    out.reserve(path.elements.size());
    for (const auto& id : path.elements) {
        if (const auto it = r.node_of_section.find(id); it != r.node_of_section.end()) {
            out.push_back(it->second);
        } else if (const auto jt = r.node_of_mu_node.find(id); jt != r.node_of_mu_node.end()) {
            out.push_back(jt->second);
        } else {
            throw Error(ErrorKind::invalid_path,
                        "'" + id + "' has no 0-node in the replacement graph");
        }
        if (out.size() > 1 && !r.graph.has_edge(out[out.size() - 2], out.back())) {
            throw Error(ErrorKind::invalid_path, "path step into '" + id + "' has no branch");
        }
    }
    return out;
}

bool verify_length_relation(const TransfiniteGraph& g, const ReplacementResult& r,
                            const AbstractPath& path) {
    const auto q = translate_path(r, path);
    return path_mu_length(g, path) == scale_by_natural(omega_term(g.rank, 1), q.size() - 1);
}

std::vector<AbstractPath> enumerate_abstract_paths(const TransfiniteGraph& g, std::size_t limit) {
    // Walk the incidence relation of g itself, not the replacement graph.
    std::vector<std::string> entries;
    std::vector<bool> is_section;
    for (const auto& s : g.sections) {
        entries.push_back(s.id);
        is_section.push_back(true);
    }
    for (const auto& x : g.mu_nodes) {
        if (x.nonsingleton() || is_included_singleton(g, x)) {
            entries.push_back(x.id);
            is_section.push_back(false);
        }
    }
    std::vector<std::vector<std::size_t>> adjacent(entries.size());
    for (std::size_t a = 0; a < entries.size(); ++a) {
        for (std::size_t b = 0; b < entries.size(); ++b) {
            if (is_section[a] && !is_section[b] && g.incident(entries[b], entries[a])) {
                adjacent[a].push_back(b);
                adjacent[b].push_back(a);
            }
        }
    }
    for (auto& adj : adjacent) {
        std::sort(adj.begin(), adj.end());
    }

    std::vector<AbstractPath> out;
    std::vector<std::size_t> stack;
    std::vector<bool> on_path(entries.size(), false);
    auto extend = [&](auto&& self) -> void {
        if (out.size() >= limit) {
            throw Error(ErrorKind::out_of_range, "too many abstract paths to enumerate");
        }
        AbstractPath p;
        for (const auto v : stack) {
            p.elements.push_back(entries[v]);
        }
        out.push_back(std::move(p));
        for (const auto w : adjacent[stack.back()]) {
            if (!on_path[w]) {
                on_path[w] = true;
                stack.push_back(w);
                self(self);
                stack.pop_back();
                on_path[w] = false;
            }
        }
    };
    for (std::size_t v = 0; v < entries.size(); ++v) {
        on_path[v] = true;
        stack.push_back(v);
        extend(extend);
        stack.pop_back();
        on_path[v] = false;
    }
    return out;
}

} // namespace tfstatus
