#pragma once

#include <stdexcept>
#include <string>

namespace linkgrp {

// Every domain failure maps to one of these codes so the CLI can report a
// stable machine-readable error kind.
enum class ErrorKind {
    parse_error,
    non_planar,
    dangling_edge,
    disconnected,
    convention_mismatch,
    not_a_pair,
    stale_occurrence,
    not_small_cancellation,
    bad_parity_shape,
    process_y_failed,
    not_geodesic,
    contains_x0,
    not_loop_like,
    preconditions_violated,
    no_parity,
    internal,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace linkgrp
