#pragma once

#include <stdexcept>
#include <string>

namespace bsswitch {

// Bad user-supplied parameter (lambda < 2, r_a outside (0,1), ...).
struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A caller broke a documented precondition.
struct ContractViolation : std::logic_error {
  using std::logic_error::logic_error;
};

struct GenerationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text. The message names the offending field or line.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Well-formed input that breaks a data invariant.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GroupingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace bsswitch
