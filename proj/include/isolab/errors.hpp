#pragma once

#include <stdexcept>
#include <string>

namespace isolab {

// Bad input: wrong shape, wrong trace, unparsable rational, unsupported fiber.
class ValidationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A mathematical check that should hold by construction did not.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// Exact division that leaves a remainder, or a square root of a non-square.
class InexactError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

} // namespace isolab
