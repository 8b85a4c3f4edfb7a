#pragma once

#include <stdexcept>
#include <string>

namespace kisin {

// Non-unit inverse, degenerate field data, division by zero.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-range input records and parameters.
struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A record that does not match its schema; the message names the JSON path.
struct SchemaError : InvalidInput {
  using InvalidInput::InvalidInput;
};

// A vector that admits no string decomposition.
struct ClassificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidMove : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a truncated computation has not stabilized.
struct PrecisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The hypotheses of a bound or check are not met by the input.
struct HypothesisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace kisin
