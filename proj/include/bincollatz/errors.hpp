#pragma once

#include <stdexcept>
#include <string>

namespace bincollatz {

/// Input text that is not a valid number or bitstring.
class MalformedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Well-formed input outside the domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bincollatz
