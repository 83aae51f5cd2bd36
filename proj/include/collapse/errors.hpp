#pragma once

#include <stdexcept>
#include <string>

namespace collapse {

// Error with a stable machine-readable kind ("config-not-found",
// "newton-divergence", ...) next to the human message.
class SolverError : public std::runtime_error {
public:
    SolverError(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

class ConfigError : public SolverError {
public:
    using SolverError::SolverError;
};

} // namespace collapse
