#pragma once

#include <stdexcept>

namespace rcum {

// Requested order or enumeration budget exceeds what exact 64-bit integer
// arithmetic (binomials, partition coefficients) or the path guard allows.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid model definition: transition probabilities, masses, shapes.
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file (CSV paths, tree JSON).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rcum
