#pragma once

#include <stdexcept>
#include <string>

namespace lrpdmap {

/// Malformed or inconsistent input documents (JSON schema violations,
/// dimension mismatches in files). CLI maps this to exit code 3.
class SchemaError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Numeric failures that should be impossible under the type invariants
/// (e.g. Cholesky breakdown of the capacitance matrix) or detected
/// divergence / oracle mismatch. CLI maps this to exit code 4.
class NumericError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Geometrically invalid input, e.g. resampling a zero-length polyline.
class GeometryError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

} // namespace lrpdmap
