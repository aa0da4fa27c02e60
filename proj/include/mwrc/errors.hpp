#pragma once

#include <stdexcept>
#include <string>

namespace mwrc {

/// Argument outside the domain of a rate, power or solver function.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Scheme does not belong to the requested EE family.
class UnsupportedScheme : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Bad sweep specification or command-line configuration.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An iterative solver hit its iteration cap.
class NonConvergence : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace mwrc
