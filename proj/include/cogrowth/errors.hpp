#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace cogrowth {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Bad input: malformed spec files, invalid parameters, rejected rule sets.
/// The CLI maps this to exit code 2.
class UsageError : public Error {
public:
  using Error::Error;
};

/// An operation was applied to an engine that cannot support it,
/// e.g. requesting a finite structure report from an infinite engine.
class DomainError : public UsageError {
public:
  using UsageError::UsageError;
};

/// A configured element cap was exceeded. Carries the exploration depth
/// reached when the enclosing computation knows it. CLI exit code 3.
class ResourceError : public Error {
public:
  explicit ResourceError(const std::string& what,
                         std::optional<std::size_t> layer = std::nullopt)
      : Error(what), layer_reached(layer) {}

  std::optional<std::size_t> layer_reached;
};

/// A rewriting system failed the local confluence check. The message names
/// the unresolvable critical pair.
class ConfluenceError : public UsageError {
public:
  ConfluenceError(const std::string& what, std::string left, std::string right)
      : UsageError(what), pair_left(std::move(left)), pair_right(std::move(right)) {}

  std::string pair_left;   // irreducible descendants that failed to join
  std::string pair_right;
};

}  // namespace cogrowth
