// Copyright (c) tfstatus contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tfstatus {

enum class ErrorKind {
    syntax,
    dangling_reference,
    duplicate_identifier,
    invalid_graph,
    unknown_node,
    disconnected,
    out_of_range,
    invalid_path,
    validation_failed,
    no_path_distance,
    no_witness,
    io,
};

std::string_view to_string(ErrorKind kind);

/// Every library failure is reported through this exception; `kind()` lets
/// callers (the CLI in particular) map failures onto exit codes.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

} // namespace tfstatus
