// Copyright (c) tfstatus contributors.
// SPDX-License-Identifier: Apache-2.0
#include "tfstatus/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tfstatus/error.hpp"
#include "tfstatus/finite_graph.hpp"
#include "tfstatus/replacement.hpp"
#include "tfstatus/status_engine.hpp"
#include "tfstatus/transfinite_model.hpp"

namespace tfstatus {

namespace {

using ordered_json = nlohmann::ordered_json;

Document load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::io, "cannot read '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_document(buffer.str());
}

TransfiniteGraph load_transfinite(const std::string& path, const char* command) {
    auto doc = load(path);
    if (auto* g = std::get_if<TransfiniteGraph>(&doc)) {
        return std::move(*g);
    }
    throw Error(ErrorKind::syntax, std::string(command) + " expects a document of positive rank");
}

std::string kind_name(ZeroNodeKind kind) {
    switch (kind) {
    case ZeroNodeKind::mu_node: return "mu-node";
    case ZeroNodeKind::section: return "section";
    case ZeroNodeKind::singleton: return "singleton";
    }
    return "node";
}

std::string id_list(const std::vector<std::string>& ids) {
    std::string out;
    for (const auto& id : ids) {
        out += (out.empty() ? "" : ", ") + id;
    }
    return out;
}

int print_validation(const ValidationReport& report, bool as_json, std::ostream& out) {
    if (as_json) {
        ordered_json root;
        root["passed"] = report.passed();
        auto violations = ordered_json::array();
        for (const auto& v : report.violations) {
            violations.push_back({{"condition", v.condition}, {"message", v.message}, {"ids", v.ids}});
        }
        root["violations"] = std::move(violations);
        root["notes"] = report.notes;
        out << root.dump(2) << "\n";
    } else {
        if (report.passed()) {
            out << "validation: passed\n";
        } else {
            out << "validation: failed (" << report.violations.size()
                << (report.violations.size() == 1 ? " violation" : " violations") << ")\n";
        }
        for (const auto& v : report.violations) {
            out << "violation [" << v.condition << "]: " << v.message;
            if (!v.ids.empty()) {
                out << " (" << id_list(v.ids) << ")";
            }
            out << "\n";
        }
        for (const auto& note : report.notes) {
            out << "note: " << note << "\n";
        }
    }
    return report.passed() ? exit_ok : exit_failed;
}

ordered_json graph_json(const FiniteGraph& g) { return ordered_json::parse(to_document(g)); }

struct Options {
    std::string file;
    std::string node;
    bool walk_based = false;
    bool as_json = false;
    bool as_dot = false;
    std::size_t max_p = 0;
    std::size_t p = 0;
    std::size_t q = 0;
};

int cmd_validate(const Options& o, std::ostream& out) {
    const auto doc = load(o.file);
    if (const auto* g = std::get_if<FiniteGraph>(&doc)) {
        return print_validation(validate(*g), o.as_json, out);
    }
    return print_validation(validate(std::get<TransfiniteGraph>(doc), o.walk_based), o.as_json, out);
}

int cmd_replace(const Options& o, std::ostream& out) {
    const auto g = load_transfinite(o.file, "replace");
    const auto r = build_replacement(g, o.walk_based);
    if (o.as_dot) {
        out << to_dot(r.graph);
    } else if (o.as_json) {
        out << to_document(r.graph);
    } else {
        out << "rank: " << r.rank << "\n"
            << "p: " << r.graph.node_count() << "\n"
            << "q: " << r.graph.edge_count() << "\n"
            << "0-nodes:\n";
        for (FiniteGraph::Index v = 0; v < r.graph.node_count(); ++v) {
            const auto& src = r.source_of_node[v];
            out << "  " << r.graph.id(v) << " <- " << kind_name(src.kind) << " " << src.id << "\n";
        }
        out << "branches:\n";
        for (const auto& [u, v] : r.graph.edges()) {
            out << "  " << r.graph.id(u) << " -- " << r.graph.id(v) << "\n";
        }
    }
    return exit_ok;
}

int cmd_status(const Options& o, std::ostream& out) {
    const auto doc = load(o.file);
    if (!o.node.empty()) {
        Ordinal value;
        if (const auto* fg = std::get_if<FiniteGraph>(&doc)) {
            value = Ordinal(status(*fg, fg->index_of(o.node)));
        } else {
            const auto& g = std::get<TransfiniteGraph>(doc);
            value = mu_status(g, build_replacement(g, o.walk_based), o.node);
        }
        if (o.as_json) {
            ordered_json root;
            root["id"] = o.node;
            root["status"] = format(value);
            out << root.dump(2) << "\n";
        } else {
            out << o.node << ": " << format(value) << "\n";
        }
        return exit_ok;
    }
    const auto report = std::holds_alternative<FiniteGraph>(doc)
                            ? status_report(std::get<FiniteGraph>(doc))
                            : status_report(std::get<TransfiniteGraph>(doc), o.walk_based);
    out << (o.as_json ? to_json(report) : to_text(report));
    return exit_ok;
}

int cmd_bounds(const Options& o, std::ostream& out) {
    const auto doc = load(o.file);
    const auto report = std::holds_alternative<FiniteGraph>(doc)
                            ? status_report(std::get<FiniteGraph>(doc))
                            : status_report(std::get<TransfiniteGraph>(doc), o.walk_based);
    if (o.as_json) {
        ordered_json root;
        root["rank"] = report.rank;
        root["p"] = report.p;
        root["q"] = report.q;
        root["lower"] = format(report.lower);
        root["upper"] = format(report.upper);
        root["achieved_lower"] = report.achieved_lower;
        root["achieved_upper"] = report.achieved_upper;
        out << root.dump(2) << "\n";
    } else {
        out << "rank: " << report.rank << "\n"
            << "p: " << report.p << "\n"
            << "q: " << report.q << "\n"
            << "lower: " << format(report.lower) << "\n"
            << "upper: " << format(report.upper) << "\n"
            << "achieved lower: "
            << (report.achieved_lower.empty() ? "(none)" : id_list(report.achieved_lower)) << "\n"
            << "achieved upper: "
            << (report.achieved_upper.empty() ? "(none)" : id_list(report.achieved_upper)) << "\n";
    }
    return exit_ok;
}

int cmd_ejs_check(const Options& o, std::ostream& out, std::ostream& err) {
    const auto doc = load(o.file);
    const auto* g = std::get_if<FiniteGraph>(&doc);
    if (g == nullptr) {
        throw Error(ErrorKind::syntax, "ejs-check expects a rank-0 document");
    }
    if (g->node_count() == 0 || !is_connected(*g)) {
        err << "error: graph is disconnected; status bounds do not apply\n";
        return exit_failed;
    }
    const auto bounds = status_bounds(*g);
    out << "p: " << bounds.p << "\n"
        << "q: " << bounds.q << "\n"
        << "bounds: [" << bounds.lower << ", " << bounds.upper << "]\n";
    std::size_t violations = 0;
    for (FiniteGraph::Index v = 0; v < g->node_count(); ++v) {
        const auto s = status(*g, v);
        const bool ok = bounds.lower <= s && s <= bounds.upper;
        violations += ok ? 0 : 1;
        out << "  " << g->id(v) << ": " << s << (ok ? "" : "  VIOLATION") << "\n";
    }
    out << violations << " violations among " << g->node_count() << " nodes\n";
    return violations == 0 ? exit_ok : exit_failed;
}

int cmd_verify_ejs(const Options& o, std::ostream& out) {
    if (o.max_p < 1 || o.max_p > max_enumeration_order) {
        throw Error(ErrorKind::out_of_range,
                    "--max-p must lie in 1.." + std::to_string(max_enumeration_order));
    }
    std::uint64_t graphs = 0;
    std::uint64_t violations = 0;
    for (std::size_t p = 1; p <= o.max_p; ++p) {
        const auto tally = verify_ejs_bounds(p);
        out << "p=" << p << ": " << tally.graphs << " graphs, " << tally.nodes << " nodes, "
            << tally.violations << " violations\n";
        graphs += tally.graphs;
        violations += tally.violations;
    }
    out << "checked " << graphs << " graphs, " << violations << " violations\n";
    return violations == 0 ? exit_ok : exit_failed;
}

int cmd_extremal(const Options& o, std::ostream& out) {
    const auto result = extremal_search(o.p, o.q);
    if (o.as_json) {
        auto witness = [](const Witness& w, std::uint64_t bound) {
            ordered_json j;
            j["bound"] = bound;
            j["node"] = w.node;
            j["status"] = w.status;
            j["graph"] = graph_json(w.graph);
            return j;
        };
        ordered_json root;
        root["p"] = result.bounds.p;
        root["q"] = result.bounds.q;
        root["lower"] = witness(result.lower, result.bounds.lower);
        root["upper"] = witness(result.upper, result.bounds.upper);
        out << root.dump(2) << "\n";
    } else {
        out << "p: " << result.bounds.p << "\n"
            << "q: " << result.bounds.q << "\n"
            << "lower bound " << result.bounds.lower << " achieved by " << result.lower.node
            << " in\n"
            << to_dot(result.lower.graph) << "upper bound " << result.bounds.upper
            << " achieved by " << result.upper.node << " in\n"
            << to_dot(result.upper.graph);
    }
    return exit_ok;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Statuses of nodes in transfinite graphs and their bounds", "tfstatus"};
    app.require_subcommand(1);
    Options o;

    auto* validate_cmd = app.add_subcommand("validate", "Check a document against the standing assumptions");
    validate_cmd->add_option("file", o.file, "Document (JSON)")->required();
    validate_cmd->add_flag("--walk-based", o.walk_based, "Walk-based mode (Condition A not required)");
    validate_cmd->add_flag("--json", o.as_json, "Emit JSON");

    auto* replace_cmd = app.add_subcommand("replace", "Print the replacement 0-graph");
    replace_cmd->add_option("file", o.file, "Document (JSON)")->required();
    auto* dot_flag = replace_cmd->add_flag("--dot", o.as_dot, "Emit DOT");
    auto* json_flag = replace_cmd->add_flag("--json", o.as_json, "Emit a rank-0 document");
    dot_flag->excludes(json_flag);
    replace_cmd->add_flag("--walk-based", o.walk_based, "Walk-based mode");

    auto* status_cmd = app.add_subcommand("status", "Compute node statuses and bounds");
    status_cmd->add_option("file", o.file, "Document (JSON)")->required();
    status_cmd->add_option("--node", o.node, "Report only this node (any internal node allowed)");
    status_cmd->add_flag("--walk-based", o.walk_based, "Walk-based mode");
    status_cmd->add_flag("--json", o.as_json, "Emit JSON");

    auto* bounds_cmd = app.add_subcommand("bounds", "Print p, q, the status bounds and who attains them");
    bounds_cmd->add_option("file", o.file, "Document (JSON)")->required();
    bounds_cmd->add_flag("--walk-based", o.walk_based, "Walk-based mode");
    bounds_cmd->add_flag("--json", o.as_json, "Emit JSON");

    auto* ejs_check_cmd = app.add_subcommand("ejs-check", "Check the finite status bounds on a rank-0 document");
    ejs_check_cmd->add_option("file", o.file, "Rank-0 document (JSON)")->required();

    auto* verify_cmd = app.add_subcommand("verify-ejs", "Exhaustively check the finite status bounds");
    verify_cmd->add_option("--max-p", o.max_p, "Largest graph order (at most 7)")->required();

    auto* extremal_cmd = app.add_subcommand("extremal", "Find graphs attaining the finite status bounds");
    extremal_cmd->add_option("--p", o.p, "Number of nodes")->required();
    extremal_cmd->add_option("--q", o.q, "Number of edges")->required();
    extremal_cmd->add_flag("--json", o.as_json, "Emit JSON");

    std::vector<const char*> argv{"tfstatus"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? exit_ok : exit_input_error;
    }

    try {
        if (validate_cmd->parsed()) {
            return cmd_validate(o, out);
        }
        if (replace_cmd->parsed()) {
            return cmd_replace(o, out);
        }
        if (status_cmd->parsed()) {
            return cmd_status(o, out);
        }
        if (bounds_cmd->parsed()) {
            return cmd_bounds(o, out);
        }
        if (ejs_check_cmd->parsed()) {
            return cmd_ejs_check(o, out, err);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify_ejs(o, out);
        }
        return cmd_extremal(o, out);
    } catch (const Error& e) {
        err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return e.kind() == ErrorKind::validation_failed ? exit_failed : exit_input_error;
    }
}

} // namespace tfstatus
