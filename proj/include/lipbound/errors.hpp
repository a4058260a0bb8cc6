#pragma once

#include <stdexcept>
#include <string>

namespace lipbound {

/// Input data that violates a structural invariant (bad dims, NaN entries, ...).
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Kernel shapes the library deliberately does not support (even s, odd paddings).
struct UnsupportedShapeError : ValidationError {
  explicit UnsupportedShapeError(const std::string& what) : ValidationError(what) {}
};

/// Malformed file content; the message names the offending field.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Filesystem failure; the message carries the path.
struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid algorithm parameter (S = 0, empty coefficient array, ...).
struct ParameterError : std::invalid_argument {
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

/// Certification requested with S <= 2d, where the grid factor is undefined.
struct CertificationError : std::invalid_argument {
  explicit CertificationError(const std::string& what) : std::invalid_argument(what) {}
};

/// Dense materialization would exceed the memory guard.
struct SizeError : std::runtime_error {
  explicit SizeError(const std::string& what) : std::runtime_error(what) {}
};

/// Mathematically undefined request (log of a zero bound).
struct DomainError : std::domain_error {
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace lipbound
