#pragma once

#include <stdexcept>
#include <string>

namespace he3oam {

/// Value outside its physical domain (e.g. |P| > 1, negative K).
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Malformed textual input (rational, half-integer, CSV field).
class ParseError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// (j, m) pair violating |m| <= j, j >= 0 or the twice-value parity rule.
class InvalidQuantumNumber : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A product of square roots left the field Q(sqrt 2).
class UnsupportedRadicand : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// Channel or evaluator used with a capture model of the other mode.
class ModeMismatch : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Design matrix cannot identify every channel constant.
class DegenerateDesign : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class NotFound : public std::out_of_range {
  public:
    using std::out_of_range::out_of_range;
};

} // namespace he3oam
