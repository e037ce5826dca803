#pragma once

#include <stdexcept>
#include <string>

namespace gridkit {

/// Failures while reading or writing files.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Base class for numerical failures (degenerate inputs, vanishing
/// denominators).  CLI maps these to a dedicated exit code.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The Dirac-cell integral of the point spread function vanishes; the
/// rescaling factor is undefined.
class DegeneratePsfError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// A fixed-point denominator vanished (a sample sees no kernel mass).
class ZeroDenominatorError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Geometry too degenerate for a planar Voronoi diagram.
class DegenerateGeometryError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// A dense operator would exceed the configured memory budget.  Callers can
/// retry with the matrix-free mode.
class MemoryBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gridkit
