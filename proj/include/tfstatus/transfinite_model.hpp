// Copyright (c) tfstatus contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "tfstatus/finite_graph.hpp"

namespace tfstatus {

/// A (mu-1)-tip, known only by the section its representative paths lie in.
struct Tip {
    std::string id;
    std::string section;
};

/// A maximal mu-node. Pristine by construction: it holds tips and nothing else.
struct MuNode {
    std::string id;
    std::vector<Tip> tips;

    [[nodiscard]] bool nonsingleton() const noexcept { return tips.size() >= 2; }
};

struct InternalNode {
    std::string id;
    std::uint64_t rank = 0;
    bool nonsingleton = true;
};

/// A (mu-1)-section, reduced to the named lower-rank nodes it contains.
/// All distances inside a section are zero, so nothing else is recorded.
struct Section {
    std::string id;
    std::vector<InternalNode> internal_nodes;
    /// Id of the chosen representative internal node; empty when none was given.
    std::string representative;

    [[nodiscard]] const InternalNode* find_internal(std::string_view node) const;
};

struct TransfiniteGraph {
    std::uint64_t rank = 1;
    std::vector<Section> sections;
    std::vector<MuNode> mu_nodes;
    /// Declared nondisconnectable tip pairs.
    std::vector<std::pair<std::string, std::string>> nondisconnectable_pairs;
    /// Singleton mu-nodes whose distances are to be counted as well.
    std::vector<std::string> include_singletons;

    [[nodiscard]] const Section* find_section(std::string_view id) const;
    [[nodiscard]] const MuNode* find_mu_node(std::string_view id) const;
    /// Section containing the given internal node, if any.
    [[nodiscard]] const Section* section_of_internal(std::string_view node) const;
    /// The mu-node owning the given tip, if any.
    [[nodiscard]] const MuNode* owner_of_tip(std::string_view tip) const;
    /// True iff `mu_node` has a tip in section `section`.
    [[nodiscard]] bool incident(std::string_view mu_node, std::string_view section) const;
};

/// A parsed document: `rank: 0` yields a finite graph.
using Document = std::variant<FiniteGraph, TransfiniteGraph>;

/// Parses the JSON document format and checks referential integrity.
/// Throws Error(syntax | dangling_reference | duplicate_identifier | invalid_graph).
Document parse_document(std::string_view text);

/// As parse_document, but rejects rank-0 documents.
TransfiniteGraph parse_transfinite(std::string_view text);

/// Emits a finite graph as a `rank: 0` document.
std::string to_document(const FiniteGraph& g);

struct Violation {
    /// Which condition failed: "4.1", "4.2", "4.3", "4.5", "representative",
    /// "internal-rank", "include-singletons" or "connected".
    std::string condition;
    std::string message;
    std::vector<std::string> ids;
};

struct ValidationReport {
    std::vector<Violation> violations;
    /// Interpretation notes; these never affect `passed()`.
    std::vector<std::string> notes;

    [[nodiscard]] bool passed() const noexcept { return violations.empty(); }
};

/// Checks the standing assumptions on a transfinite graph. With `walk_based`
/// the Condition A check (4.3) is skipped.
ValidationReport validate(const TransfiniteGraph& g, bool walk_based);

/// Connectivity check for finite (`rank: 0`) documents.
ValidationReport validate(const FiniteGraph& g);

struct MuNodeClasses {
    std::vector<std::string> nonsingleton;
    std::vector<std::string> singleton;
};

MuNodeClasses classify_mu_nodes(const TransfiniteGraph& g);

/// Number of distinct nonsingleton mu-nodes with a tip in section `section`.
std::size_t section_degree(const TransfiniteGraph& g, std::string_view section);

} // namespace tfstatus
