#pragma once

#include <stdexcept>
#include <string>

namespace pgzero {

/// Invalid parameters or a mathematically inadmissible request
/// (e.g. semidihedral of order 8, mz of an abelian group).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Elements and groups that do not belong together.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Bad user input: malformed files, inconsistent presentations.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An invariant that holds mathematically was violated; signals a bug.
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed character table failed one of its integrity checks.
class TableIntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pgzero
