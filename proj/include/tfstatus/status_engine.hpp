// Copyright (c) tfstatus contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tfstatus/finite_graph.hpp"
#include "tfstatus/ordinal.hpp"
#include "tfstatus/replacement.hpp"
#include "tfstatus/transfinite_model.hpp"

namespace tfstatus {

/// Distance between two nodes of a transfinite graph: w^mu times the hop
/// distance of their 0-nodes. Internal nodes of a section share the section's
/// 0-node, so nodes of one section are at distance 0.
///
/// Ids may name nonsingleton mu-nodes, included singleton mu-nodes, or
/// nonsingleton internal nodes. Any other singleton has no path-based
/// distance: Error(no_path_distance). Unknown ids: Error(unknown_node).
Ordinal mu_distance(const TransfiniteGraph& g, const ReplacementResult& r, std::string_view a,
                    std::string_view b);

/// A shortest abstract path from a to b; among shortest paths, the one whose
/// 0-node id sequence is lexicographically smallest.
AbstractPath geodesic(const TransfiniteGraph& g, const ReplacementResult& r, std::string_view a,
                      std::string_view b);

/// Sum of the distances from x to every nonsingleton mu-node, to every
/// section representative and to every included singleton. Statuses exist
/// only for nonsingleton nodes.
Ordinal mu_status(const TransfiniteGraph& g, const ReplacementResult& r, std::string_view x);

struct MuBounds {
    Ordinal lower;
    Ordinal upper;
    std::uint64_t p = 0;
    std::uint64_t q = 0;
};

/// w^mu * (p-1) and w^mu * ((p-1)(p+2)/2 - q) for the replacement graph.
MuBounds mu_status_bounds(const TransfiniteGraph& g, const ReplacementResult& r);

enum class NodeKind { mu_node, section_representative, included_singleton, node };

std::string_view to_string(NodeKind kind);

struct StatusEntry {
    std::string id;
    NodeKind kind;
    Ordinal status;
};

struct StatusReport {
    std::uint64_t rank = 0;
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    Ordinal lower;
    Ordinal upper;
    /// Nonsingleton mu-nodes, then one representative per section.
    std::vector<StatusEntry> nodes;
    std::vector<std::string> achieved_lower;
    std::vector<std::string> achieved_upper;
    /// Singleton mu-nodes counted in p and q.
    std::vector<std::string> included_singletons;
};

/// Validates g (Error(validation_failed) when it is not admissible), builds
/// the replacement and computes every status and the bounds.
StatusReport status_report(const TransfiniteGraph& g, bool walk_based);

/// The rank-0 analogue: finite statuses and the finite bounds.
StatusReport status_report(const FiniteGraph& g);

std::string to_json(const StatusReport& report);
std::string to_text(const StatusReport& report);

} // namespace tfstatus
