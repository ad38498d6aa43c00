#pragma once

#include <stdexcept>
#include <string>

namespace holocontact {

// Two families: bad input (caller's fault) and numerical failure (the data is
// fine but an algorithm could not deliver). The CLI maps them to exit codes 2
// and 3 respectively.

class InputError : public std::invalid_argument {
public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

class NumericalError : public std::runtime_error {
public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

class DimensionMismatch : public InputError {
public:
  using InputError::InputError;
};

class NonHomogeneousForm : public InputError {
public:
  using InputError::InputError;
};

class ParityError : public InputError {
public:
  using InputError::InputError;
};

class NotMorseError : public InputError {
public:
  using InputError::InputError;
};

class SingularMatrixError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class ConvergenceError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class SingularGradientError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class FlowError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

} // namespace holocontact
