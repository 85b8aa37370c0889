// Copyright (c) tfstatus contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tfstatus/finite_graph.hpp"
#include "tfstatus/ordinal.hpp"
#include "tfstatus/transfinite_model.hpp"

namespace tfstatus {

enum class ZeroNodeKind { mu_node, section, singleton };

/// What a 0-node of the replacement graph stands for.
struct ZeroNodeSource {
    ZeroNodeKind kind;
    /// Mu-node id for `mu_node`/`singleton`, section id for `section`.
    std::string id;
};

/**
 * The finite 0-graph standing in for a transfinite graph.
 *
 * Each nonsingleton mu-node becomes a 0-node named after the mu-node. Each
 * section becomes a 0-node named after its representative, joined by one
 * branch to every nonsingleton mu-node incident to the section (a star).
 * Included singleton mu-nodes become leaves hanging off the 0-node of their
 * tip's section. Node order: mu-nodes, sections, singletons, each in
 * declaration order.
 */
struct ReplacementResult {
    std::uint64_t rank = 1;
    FiniteGraph graph;
    std::map<std::string, FiniteGraph::Index> node_of_mu_node;
    std::map<std::string, FiniteGraph::Index> node_of_section;
    /// Reverse correspondence, aligned with graph.nodes().
    std::vector<ZeroNodeSource> source_of_node;
};

/// Builds the replacement after checking validate(g, walk_based); throws
/// Error(validation_failed) when the graph is not admissible.
ReplacementResult build_replacement(const TransfiniteGraph& g, bool walk_based = false);

/// The same construction without the validation gate. Sections lacking a
/// representative fall back to the section id; invalid singleton inclusions
/// are skipped.
ReplacementResult assemble_replacement(const TransfiniteGraph& g);

/// A path at section / mu-node granularity: alternating section and mu-node
/// ids, consecutive entries incident, no entry repeated.
struct AbstractPath {
    std::vector<std::string> elements;

    friend bool operator==(const AbstractPath&, const AbstractPath&) = default;
};

/// Number of incidences the path makes with mu-nodes: one for each terminal
/// mu-node entry, two for each interior one. Throws Error(invalid_path).
std::uint64_t incidence_count(const TransfiniteGraph& g, const AbstractPath& path);

/// w^mu * incidence_count.
Ordinal path_mu_length(const TransfiniteGraph& g, const AbstractPath& path);

/// The corresponding path in the replacement graph, as 0-node indices.
/// Throws Error(invalid_path) for entries with no 0-node (e.g. a singleton
/// mu-node that was not included) or non-adjacent steps.
std::vector<FiniteGraph::Index> translate_path(const ReplacementResult& r, const AbstractPath& path);

/// |P| == w^mu * |Q| for the translated path Q.
bool verify_length_relation(const TransfiniteGraph& g, const ReplacementResult& r,
                            const AbstractPath& path);

/// All simple abstract paths (including one-element paths) over the sections,
/// the nonsingleton mu-nodes and the included singletons. Throws
/// Error(out_of_range) once more than `limit` paths would be produced.
std::vector<AbstractPath> enumerate_abstract_paths(const TransfiniteGraph& g,
                                                   std::size_t limit = 1'000'000);

} // namespace tfstatus
