#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace s4bell {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two permutations of different degree were combined.
class IncompatiblePermutations : public Error {
 public:
  using Error::Error;
};

/// A sequence of images that is not a bijection on {0, ..., n-1}.
class InvalidPermutation : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. `position()` is the 0-based offset of the offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A representation whose matrices violate a structural identity.
class RepresentationCorrupt : public Error {
 public:
  using Error::Error;
};

/// Projector traces disagree with the expected isotypic dimensions.
class DecompositionFailure : public Error {
 public:
  using Error::Error;
};

/// Bundled reference data disagrees with computed data.
class FixtureMismatch : public Error {
 public:
  using Error::Error;
};

/// The orbit of a seed has fewer than |G| distinct points.
class DegenerateOrbit : public Error {
 public:
  explicit DegenerateOrbit(std::size_t orbit_size)
      : Error("degenerate orbit: only " + std::to_string(orbit_size) + " distinct vectors"),
        orbit_size_(orbit_size) {}

  std::size_t orbit_size() const { return orbit_size_; }

 private:
  std::size_t orbit_size_;
};

/// No exact cover of the vectors by mutually orthogonal triples exists.
class PartitionFailure : public Error {
 public:
  using Error::Error;
};

/// Input to a symmetric eigensolver was not symmetric.
class NotSymmetric : public Error {
 public:
  using Error::Error;
};

/// A Bell expression contained the same probability term twice.
class DuplicateTerm : public Error {
 public:
  using Error::Error;
};

/// A violated internal consistency check; indicates a bug rather than bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace s4bell
