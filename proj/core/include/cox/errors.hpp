#ifndef COX_ERRORS_HPP_
#define COX_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cox {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed presentation data (shape, diagonal, symmetry, off-diagonal range).
struct InvalidMatrix : Error {
  enum class Kind { BadShape, BadDiagonal, BadOffDiagonal, NotSymmetric };
  Kind kind;
  InvalidMatrix(Kind k, const std::string& what) : Error(what), kind(k) {}
};

// Unreadable presentation/map file or word string.
struct ParseError : Error {
  using Error::Error;
};

// Two elements from different presentations were combined.
struct MatrixMismatch : Error {
  using Error::Error;
};

// A configurable resource cap was hit; retrying with a larger cap may succeed.
struct CapExceeded : Error {
  using Error::Error;
};

struct WordTooLong : CapExceeded {
  std::size_t length;
  std::size_t cap;
  WordTooLong(std::size_t len, std::size_t c)
      : CapExceeded("word of length " + std::to_string(len) +
                    " exceeds reduction cap " + std::to_string(c)),
        length(len),
        cap(c) {}
};

// A closure or coset walk left an incomplete enumeration ball.
struct BallEscape : CapExceeded {
  using CapExceeded::CapExceeded;
};

// Conjugation descent exhausted its state cap without a certificate.
struct DescentStuck : CapExceeded {
  using CapExceeded::CapExceeded;
};

// A ball search ended without locating the requested object.
struct NotFoundInRadius : CapExceeded {
  using CapExceeded::CapExceeded;
};

struct NotSpherical : Error {
  using Error::Error;
};

struct NotInvolution : Error {
  using Error::Error;
};

struct NotTwoDimensional : Error {
  using Error::Error;
};

struct IsReflection : Error {
  using Error::Error;
};

// Twist hypothesis failed: m(s,t) != 2 or s has another finite label.
struct HypothesisViolated : Error {
  using Error::Error;
};

// A generator map is malformed or fails the defining-relator check.
struct InvalidGeneratorMap : Error {
  using Error::Error;
};

// A machine-checked conclusion failed; carries the violated clause.
struct TheoremViolation : Error {
  std::string clause;
  TheoremViolation(std::string cl, const std::string& what)
      : Error(what), clause(std::move(cl)) {}
};

// Two distinct matches where a unique one is guaranteed; indicates a bug
// or an input map that is not an isomorphism.
struct AmbiguousMatch : Error {
  using Error::Error;
};

}  // namespace cox

#endif  // COX_ERRORS_HPP_
