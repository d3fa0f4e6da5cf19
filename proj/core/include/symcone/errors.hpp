#pragma once

#include <stdexcept>

namespace symcone {

/// Invalid (kind, rank, ambient dimension) combination passed to an algebra constructor.
class InvalidAlgebra : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Elements or endomorphisms from two different algebras were combined.
class AlgebraMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidFrame : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The requested operation is not available for this algebra kind.
class UnsupportedKind : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An argument lies outside the domain of a Laplace transform or cumulant.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numerical structure that must hold exactly (spectrum of Psi, Peirce
/// dimensions, integer dimension counts) came out wrong. Signals a broken
/// algebra kernel rather than bad user input.
class StructuralFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Regression constants that do not correspond to any simple Euclidean
/// Jordan algebra.
class InconsistentConstants : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace symcone
