// Copyright (c) tfstatus contributors.
// SPDX-License-Identifier: Apache-2.0
#include "tfstatus/transfinite_model.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include <json.hpp>

#include "tfstatus/error.hpp"
#include "tfstatus/replacement.hpp"

namespace tfstatus {

using nlohmann::json;

const InternalNode* Section::find_internal(std::string_view node) const {
    for (const auto& n : internal_nodes) {
        if (n.id == node) {
            return &n;
        }
    }
    return nullptr;
}

const Section* TransfiniteGraph::find_section(std::string_view id) const {
    for (const auto& s : sections) {
        if (s.id == id) {
            return &s;
        }
    }
    return nullptr;
}

const MuNode* TransfiniteGraph::find_mu_node(std::string_view id) const {
    for (const auto& x : mu_nodes) {
        if (x.id == id) {
            return &x;
        }
    }
    return nullptr;
}

const Section* TransfiniteGraph::section_of_internal(std::string_view node) const {
    for (const auto& s : sections) {
        if (s.find_internal(node) != nullptr) {
            return &s;
        }
    }
    return nullptr;
}

const MuNode* TransfiniteGraph::owner_of_tip(std::string_view tip) const {
    for (const auto& x : mu_nodes) {
        for (const auto& t : x.tips) {
            if (t.id == tip) {
                return &x;
            }
        }
    }
    return nullptr;
}

bool TransfiniteGraph::incident(std::string_view mu_node, std::string_view section) const {
    const auto* x = find_mu_node(mu_node);
    return x != nullptr && std::any_of(x->tips.begin(), x->tips.end(),
                                       [&](const Tip& t) { return t.section == section; });
}

// -- parsing ----------------------------------------------------------------

namespace {

[[noreturn]] void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

const json& member(const json& obj, const char* key, const std::string& where) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        fail(ErrorKind::syntax, where + ": missing field '" + key + "'");
    }
    return *it;
}

std::string text_field(const json& obj, const char* key, const std::string& where) {
    const auto& v = member(obj, key, where);
    if (!v.is_string() || v.get_ref<const std::string&>().empty()) {
        fail(ErrorKind::syntax, where + ": field '" + key + "' must be a nonempty string");
    }
    return v.get<std::string>();
}

const json& array_field(const json& obj, const char* key, const std::string& where,
                        bool required) {
    static const json empty = json::array();
    const auto it = obj.find(key);
    if (it == obj.end()) {
        if (required) {
            fail(ErrorKind::syntax, where + ": missing field '" + key + "'");
        }
        return empty;
    }
    if (!it->is_array()) {
        fail(ErrorKind::syntax, where + ": field '" + key + "' must be an array");
    }
    return *it;
}

std::string id_text(const json& v, const std::string& where) {
    if (!v.is_string() || v.get_ref<const std::string&>().empty()) {
        fail(ErrorKind::syntax, where + ": expected a nonempty string identifier");
    }
    return v.get<std::string>();
}

std::pair<std::string, std::string> id_pair(const json& v, const std::string& where) {
    if (!v.is_array() || v.size() != 2) {
        fail(ErrorKind::syntax, where + ": expected a pair of identifiers");
    }
    return {id_text(v[0], where), id_text(v[1], where)};
}

class IdRegistry {
  public:
    void claim(const std::string& id) {
        if (!seen_.insert(id).second) {
            fail(ErrorKind::duplicate_identifier, "duplicate identifier '" + id + "'");
        }
    }

  private:
    std::unordered_set<std::string> seen_;
};

FiniteGraph parse_finite(const json& root) {
    for (const char* key : {"sections", "mu_nodes", "nondisconnectable_pairs", "include_singletons"}) {
        if (root.contains(key)) {
            fail(ErrorKind::syntax, std::string("rank-0 document must not carry '") + key + "'");
        }
    }
    std::vector<std::string> nodes;
    for (const auto& v : array_field(root, "nodes", "document", true)) {
        nodes.push_back(id_text(v, "nodes"));
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& v : array_field(root, "edges", "document", false)) {
        edges.push_back(id_pair(v, "edges"));
    }
    return FiniteGraph(std::move(nodes), edges);
}

TransfiniteGraph parse_ranked(const json& root, std::uint64_t rank) {
    for (const char* key : {"nodes", "edges"}) {
        if (root.contains(key)) {
            fail(ErrorKind::syntax,
                 std::string("document of positive rank must not carry '") + key + "'");
        }
    }
    TransfiniteGraph g;
    g.rank = rank;
    IdRegistry ids;

    for (const auto& js : array_field(root, "sections", "document", true)) {
        if (!js.is_object()) {
            fail(ErrorKind::syntax, "sections: each entry must be an object");
        }
        Section s;
        s.id = text_field(js, "id", "section");
        ids.claim(s.id);
        const std::string where = "section '" + s.id + "'";
        for (const auto& jn : array_field(js, "internal_nodes", where, true)) {
            if (!jn.is_object()) {
                fail(ErrorKind::syntax, where + ": internal nodes must be objects");
            }
            InternalNode n;
            n.id = text_field(jn, "id", where);
            ids.claim(n.id);
            const auto& rank_field = member(jn, "rank", where + " node '" + n.id + "'");
            if (!rank_field.is_number_unsigned()) {
                fail(ErrorKind::syntax, where + ": node rank must be a natural number");
            }
            n.rank = rank_field.get<std::uint64_t>();
            if (const auto it = jn.find("nonsingleton"); it != jn.end()) {
                if (!it->is_boolean()) {
                    fail(ErrorKind::syntax, where + ": 'nonsingleton' must be a boolean");
                }
                n.nonsingleton = it->get<bool>();
            }
            s.internal_nodes.push_back(std::move(n));
        }
        if (const auto it = js.find("representative"); it != js.end() && !it->is_null()) {
            s.representative = id_text(*it, where + " representative");
            if (s.find_internal(s.representative) == nullptr) {
                fail(ErrorKind::dangling_reference,
                     where + ": representative '" + s.representative +
                         "' is not one of its internal nodes");
            }
        }
        g.sections.push_back(std::move(s));
    }
    if (g.sections.empty()) {
        fail(ErrorKind::invalid_graph, "a transfinite graph needs at least one section");
    }

    for (const auto& jx : array_field(root, "mu_nodes", "document", false)) {
        if (!jx.is_object()) {
            fail(ErrorKind::syntax, "mu_nodes: each entry must be an object");
        }
        MuNode x;
        x.id = text_field(jx, "id", "mu-node");
        ids.claim(x.id);
        const std::string where = "mu-node '" + x.id + "'";
        for (const auto& jt : array_field(jx, "tips", where, true)) {
            if (!jt.is_object()) {
                fail(ErrorKind::syntax, where + ": tips must be objects");
            }
            Tip t{text_field(jt, "id", where), text_field(jt, "section", where)};
            ids.claim(t.id);
            if (g.find_section(t.section) == nullptr) {
                fail(ErrorKind::dangling_reference,
                     "tip '" + t.id + "' references unknown section '" + t.section + "'");
            }
            x.tips.push_back(std::move(t));
        }
        if (x.tips.empty()) {
            fail(ErrorKind::invalid_graph, where + " has no tips");
        }
        g.mu_nodes.push_back(std::move(x));
    }

    for (const auto& jp : array_field(root, "nondisconnectable_pairs", "document", false)) {
        auto pair = id_pair(jp, "nondisconnectable_pairs");
        for (const auto* tip : {&pair.first, &pair.second}) {
            if (g.owner_of_tip(*tip) == nullptr) {
                fail(ErrorKind::dangling_reference,
                     "nondisconnectable pair references unknown tip '" + *tip + "'");
            }
        }
        g.nondisconnectable_pairs.push_back(std::move(pair));
    }

    std::set<std::string> included;
    for (const auto& ji : array_field(root, "include_singletons", "document", false)) {
        auto id = id_text(ji, "include_singletons");
        if (g.find_mu_node(id) == nullptr) {
            fail(ErrorKind::dangling_reference, "include_singletons names unknown mu-node '" + id + "'");
        }
        if (!included.insert(id).second) {
            fail(ErrorKind::duplicate_identifier, "include_singletons lists '" + id + "' twice");
        }
        g.include_singletons.push_back(std::move(id));
    }
    return g;
}

} // namespace

Document parse_document(std::string_view text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(ErrorKind::syntax, std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object()) {
        fail(ErrorKind::syntax, "document must be a JSON object");
    }
    const auto& rank = member(root, "rank", "document");
    if (!rank.is_number_unsigned()) {
        fail(ErrorKind::syntax, "'rank' must be a natural number");
    }
    try {
        if (rank.get<std::uint64_t>() == 0) {
            return parse_finite(root);
        }
        return parse_ranked(root, rank.get<std::uint64_t>());
    } catch (const json::exception& e) {
        fail(ErrorKind::syntax, std::string("malformed document: ") + e.what());
    }
}

TransfiniteGraph parse_transfinite(std::string_view text) {
    auto doc = parse_document(text);
    if (auto* g = std::get_if<TransfiniteGraph>(&doc)) {
        return std::move(*g);
    }
    fail(ErrorKind::syntax, "expected a document of positive rank");
}

std::string to_document(const FiniteGraph& g) {
    nlohmann::ordered_json root;
    root["rank"] = 0;
    root["nodes"] = g.nodes();
    auto edges = nlohmann::ordered_json::array();
    for (const auto& [u, v] : g.edges()) {
        edges.push_back({g.id(u), g.id(v)});
    }
    root["edges"] = std::move(edges);
    return root.dump(2) + "\n";
}

// -- classification and validation -----------------------------------------

MuNodeClasses classify_mu_nodes(const TransfiniteGraph& g) {
    MuNodeClasses out;
    for (const auto& x : g.mu_nodes) {
        (x.nonsingleton() ? out.nonsingleton : out.singleton).push_back(x.id);
    }
    return out;
}

std::size_t section_degree(const TransfiniteGraph& g, std::string_view section) {
    if (g.find_section(section) == nullptr) {
        throw Error(ErrorKind::unknown_node, "unknown section '" + std::string(section) + "'");
    }
    return static_cast<std::size_t>(std::count_if(
        g.mu_nodes.begin(), g.mu_nodes.end(),
        [&](const MuNode& x) { return x.nonsingleton() && g.incident(x.id, section); }));
}

ValidationReport validate(const TransfiniteGraph& g, bool walk_based) {
    ValidationReport report;
    auto violate = [&](std::string condition, std::string message, std::vector<std::string> ids) {
        report.violations.push_back({std::move(condition), std::move(message), std::move(ids)});
    };

    if (g.rank < 1) {
        violate("4.1", "rank must be a positive natural number", {});
    }
    if (g.sections.empty()) {
        violate("4.5", "at least one section is required", {});
    }

    for (const auto& s : g.sections) {
        for (const auto& n : s.internal_nodes) {
            if (n.rank >= g.rank) {
                violate("internal-rank", "internal node rank must be below the graph rank",
                        {s.id, n.id});
            }
        }
        const auto* rep = s.representative.empty() ? nullptr : s.find_internal(s.representative);
        if (rep == nullptr) {
            violate("representative", "section has no representative node", {s.id});
        } else if (!rep->nonsingleton) {
            violate("representative", "representative must be a nonsingleton node",
                    {s.id, rep->id});
        }
    }

    for (const auto& id : g.include_singletons) {
        const auto* x = g.find_mu_node(id);
        if (x == nullptr || x->nonsingleton()) {
            violate("include-singletons", "only singleton mu-nodes can be included", {id});
        }
    }

    if (!walk_based) {
        for (const auto& [a, b] : g.nondisconnectable_pairs) {
            const auto* xa = g.owner_of_tip(a);
            const auto* xb = g.owner_of_tip(b);
            if (xa == nullptr || xb == nullptr) {
                violate("4.3", "nondisconnectable pair names an unknown tip", {a, b});
                continue;
            }
            if (xa == xb || !xa->nonsingleton() || !xb->nonsingleton()) {
                continue;
            }
            violate("4.3",
                    "nondisconnectable tips lie in different nodes, neither of which is a "
                    "singleton (Condition A)",
                    {a, b});
        }
    }

    if (!g.sections.empty()) {
        const auto r = assemble_replacement(g);
        if (!is_connected(r.graph)) {
            std::vector<std::string> stranded;
            const auto dist = bfs_distances(r.graph, FiniteGraph::Index{0});
            for (FiniteGraph::Index v = 0; v < dist.size(); ++v) {
                if (!dist[v]) {
                    stranded.push_back(r.graph.id(v));
                }
            }
            violate("4.2", "replacement graph is disconnected (graph is not mu-connected)",
                    std::move(stranded));
        }
    }

    report.notes.push_back(
        "4.6: distances between nodes of one section are taken to be 0");
    if (walk_based) {
        report.notes.push_back("walk-based mode: Condition A (4.3) not checked");
    }
    return report;
}

ValidationReport validate(const FiniteGraph& g) {
    ValidationReport report;
    if (g.node_count() == 0) {
        report.violations.push_back({"connected", "graph has no nodes", {}});
    } else if (!is_connected(g)) {
        std::vector<std::string> stranded;
        const auto dist = bfs_distances(g, FiniteGraph::Index{0});
        for (FiniteGraph::Index v = 0; v < dist.size(); ++v) {
            if (!dist[v]) {
                stranded.push_back(g.id(v));
            }
        }
        report.violations.push_back({"connected", "graph is disconnected", std::move(stranded)});
    }
    return report;
}

} // namespace tfstatus
