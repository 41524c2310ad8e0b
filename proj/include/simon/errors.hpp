#pragma once

#include <stdexcept>
#include <string>

namespace simon {

// File/decode failures (missing files, bad magic, unsupported bit depth).
struct io_error : std::runtime_error {
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Off-manifold points, invalid curvature and similar geometric violations.
struct geometry_error : std::runtime_error {
    explicit geometry_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-finite intermediates, degenerate embeddings.
struct numeric_error : std::runtime_error {
    explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Too-small samples, zero variance.
struct stats_error : std::runtime_error {
    explicit stats_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad RunConfig keys or values.
struct config_error : std::runtime_error {
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace simon
