#ifndef THOMASON_ERRORS_HPP
#define THOMASON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace thomason {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration would exceed the configured size bound.
class BoundExceeded : public Error {
public:
  explicit BoundExceeded(const std::string& what) : Error(what) {}
};

/// A subset was used with a function whose domain/codomain does not match its ambient set.
class AmbientMismatch : public Error {
public:
  explicit AmbientMismatch(const std::string& what) : Error(what) {}
};

/// Structural validation failure (duplicate labels, non-total maps, ...).
class ValidationError : public Error {
public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

/// A candidate element table fails a homomorphism law; carries a concrete witness.
class NotAHomomorphism : public ValidationError {
public:
  explicit NotAHomomorphism(const std::string& what) : ValidationError(what) {}
};

/// Finite-meet laws hold but some atom of the codomain has no preimage atom.
class NotComplete : public ValidationError {
public:
  explicit NotComplete(const std::string& what) : ValidationError(what) {}
};

/// The reflexive-transitive closure of a relation is not antisymmetric.
class NotAPoset : public ValidationError {
public:
  explicit NotAPoset(const std::string& what) : ValidationError(what) {}
};

/// A pair of elements has no greatest lower bound.
class NoMeet : public ValidationError {
public:
  explicit NoMeet(const std::string& what) : ValidationError(what) {}
};

/// The poset has no greatest element.
class NoTop : public ValidationError {
public:
  explicit NoTop(const std::string& what) : ValidationError(what) {}
};

/// A candidate lattice map fails to preserve a binary meet.
class MeetViolation : public ValidationError {
public:
  explicit MeetViolation(const std::string& what) : ValidationError(what) {}
};

/// A candidate lattice map fails to preserve the top element.
class TopViolation : public ValidationError {
public:
  explicit TopViolation(const std::string& what) : ValidationError(what) {}
};

/// The two constructions of the left adjoint disagree.  Must never fire.
class ConstructionMismatch : public Error {
public:
  explicit ConstructionMismatch(const std::string& what) : Error(what) {}
};

/// Malformed input document.
class SchemaError : public Error {
public:
  explicit SchemaError(const std::string& what) : Error(what) {}
};

} // namespace thomason

#endif
