#pragma once

#include <stdexcept>
#include <string>

namespace schubfire {

/// Two operands were built over different Grassmannians or projective bundles.
class ContextMismatch : public std::invalid_argument {
 public:
  explicit ContextMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// A nonzero class was integrated that is not concentrated in top degree.
class DegreeMismatch : public std::domain_error {
 public:
  explicit DegreeMismatch(const std::string& what) : std::domain_error(what) {}
};

/// Parameters are mathematically valid but exceed the configured size envelope.
class GuardrailError : public std::runtime_error {
 public:
  explicit GuardrailError(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace schubfire
