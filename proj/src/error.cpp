// Copyright (c) tfstatus contributors.
// SPDX-License-Identifier: Apache-2.0
#include "tfstatus/error.hpp"

namespace tfstatus {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::syntax: return "syntax error";
    case ErrorKind::dangling_reference: return "dangling reference";
    case ErrorKind::duplicate_identifier: return "duplicate identifier";
    case ErrorKind::invalid_graph: return "invalid graph";
    case ErrorKind::unknown_node: return "unknown node";
    case ErrorKind::disconnected: return "disconnected graph";
    case ErrorKind::out_of_range: return "out of range";
    case ErrorKind::invalid_path: return "invalid path";
    case ErrorKind::validation_failed: return "validation failed";
    case ErrorKind::no_path_distance: return "no path-based distance";
    case ErrorKind::no_witness: return "no witness";
    case ErrorKind::io: return "i/o error";
    }
    return "error";
}

} // namespace tfstatus
