#pragma once

#include <stdexcept>
#include <string>

namespace oscnet {

/// Invalid configuration, dimension mismatch, or violated precondition.
/// The CLI maps this to exit code 2.
class ConfigError : public std::invalid_argument {
  public:
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

/// Numerical failure at runtime: divergence, non-convergence, degenerate
/// input signals. The CLI maps this to exit code 3.
class NumericalError : public std::runtime_error {
  public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace oscnet
