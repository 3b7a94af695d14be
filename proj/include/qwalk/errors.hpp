#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

// Stepping a state whose lattice is already full (time == horizon).
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// A density-matrix diagonal fell below the corruption threshold (-1e-9).
class NumericalCorruptionError : public std::runtime_error {
 public:
  explicit NumericalCorruptionError(const std::string& what)
      : std::runtime_error(what) {}
};

// Degenerate least-squares design matrix.
class FitError : public std::runtime_error {
 public:
  explicit FitError(const std::string& what) : std::runtime_error(what) {}
};

// Request leaves the small-p first-order regime (pT > 0.2).
class RegimeError : public std::invalid_argument {
 public:
  explicit RegimeError(const std::string& what)
      : std::invalid_argument(what) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qwalk
