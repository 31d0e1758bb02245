#pragma once

#include <stdexcept>
#include <string>

namespace coarsedim {

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed input text or files.
class ParseError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace coarsedim
