#pragma once

#include <stdexcept>
#include <string>

namespace prodquot {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MalformedInput : public Error {
 public:
  using Error::Error;
};

class ParseError : public MalformedInput {
 public:
  using MalformedInput::MalformedInput;
};

class SizeCapExceeded : public Error {
 public:
  using Error::Error;
};

class InadmissibleSignature : public Error {
 public:
  using Error::Error;
};

class GroupMismatch : public Error {
 public:
  using Error::Error;
};

class ActionNotFree : public Error {
 public:
  using Error::Error;
};

class Inconsistency : public Error {
 public:
  using Error::Error;
};

/// A sublattice is not contained in the lattice it is compared against.
class ContainmentError : public Error {
 public:
  using Error::Error;
};

/// A quotient of lattices turned out to be infinite.
class RankError : public Error {
 public:
  using Error::Error;
};

/// Raised when an operation needs G abelian and gets a non-abelian group.
class UnsupportedHypothesis : public Error {
 public:
  using Error::Error;
};

}  // namespace prodquot
