#pragma once

#include <stdexcept>
#include <string>

#include "commensurate/depth.hpp"

namespace commensurate {

/// An operation needed more precision than its inputs carry.
class PrecisionExhausted : public std::runtime_error {
public:
  PrecisionExhausted(const std::string &what, Depth required, Depth available)
      : std::runtime_error(what + ": precision exhausted, required depth " + to_string(required) +
                           ", available depth " + to_string(available)),
        required_(required), available_(available) {}

  Depth required() const { return required_; }
  Depth available() const { return available_; }

private:
  Depth required_;
  Depth available_;
};

/// An instance (or a value handed to one) broke the commensurated-pair
/// contract: an element outside G, a failing conjugation bound, and so on.
class ContractViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Element text that does not follow the instance's literal format.
class MalformedLiteral : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A finite-model description (file or in-memory) that cannot be turned into
/// a valid model or pair.
class ModelError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

} // namespace commensurate
