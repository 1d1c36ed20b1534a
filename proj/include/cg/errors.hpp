#ifndef CG_ERRORS_HPP_
#define CG_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <vector>

namespace cg {

// Base class for all domain errors raised by the library.  The CLI maps
// any Error to exit code 1 with a one-line diagnostic.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class InvalidNodeNameError : public Error {
 public:
  using Error::Error;
};

class DuplicateNodeError : public Error {
 public:
  using Error::Error;
};

class UnknownNodeError : public Error {
 public:
  using Error::Error;
};

class ConflictingEdgeError : public Error {
 public:
  using Error::Error;
};

// Raised when a hybrid graph admits no chain ordering.  The witness is a
// semi-directed cycle given as a closed node sequence (first == last).
class NotAChainGraphError : public Error {
 public:
  NotAChainGraphError(const std::string& what, std::vector<std::string> cycle)
      : Error(what), cycle_(std::move(cycle)) {}
  const std::vector<std::string>& cycle() const { return cycle_; }

 private:
  std::vector<std::string> cycle_;
};

class EmptyNodeSetError : public Error {
 public:
  using Error::Error;
};

class NotAComponentError : public Error {
 public:
  using Error::Error;
};

class NotDecomposableError : public Error {
 public:
  using Error::Error;
};

class NotACliqueError : public Error {
 public:
  using Error::Error;
};

class NodeSetMismatchError : public Error {
 public:
  using Error::Error;
};

class NotBnEquivalentError : public Error {
 public:
  using Error::Error;
};

class BadStartCliqueError : public Error {
 public:
  using Error::Error;
};

class OverlappingCompetenceError : public Error {
 public:
  using Error::Error;
};

class InfluenceNotEarlierError : public Error {
 public:
  using Error::Error;
};

class InfluenceNotCompleteError : public Error {
 public:
  using Error::Error;
};

class CompetenceDisconnectedError : public Error {
 public:
  using Error::Error;
};

// An influence node with no edge into the competence area; composing would
// drop it from the component's parent set and the closure graph could not
// reproduce the declared local structure.
class InfluenceDetachedError : public Error {
 public:
  using Error::Error;
};

class InvalidTripletError : public Error {
 public:
  using Error::Error;
};

class InvalidQueryError : public Error {
 public:
  using Error::Error;
};

class DomainMismatchError : public Error {
 public:
  using Error::Error;
};

class ScopeMismatchError : public Error {
 public:
  using Error::Error;
};

class ZeroNormalizerError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroError : public Error {
 public:
  using Error::Error;
};

class NotADistributionError : public Error {
 public:
  using Error::Error;
};

// Text-format errors carry the 1-based line number of the offending input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error(what + " at line " + std::to_string(line)), line_(line) {}
  int line() const { return line_; }

 private:
  int line_ = 0;
};

}  // namespace cg

#endif  // CG_ERRORS_HPP_
