#ifndef DOMDRAW_ERROR_HPP
#define DOMDRAW_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace domdraw {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for malformed input text or documents (edge lists, JSON files).
class InputError : public Error {
 public:
  using Error::Error;
};

class MalformedLine : public InputError {
 public:
  MalformedLine(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class CycleDetected : public InputError {
 public:
  explicit CycleDetected(std::string vertex)
      : InputError("graph contains a cycle through vertex '" + vertex + "'"),
        vertex_(std::move(vertex)) {}
  const std::string& vertex() const noexcept { return vertex_; }

 private:
  std::string vertex_;
};

class SelfLoop : public InputError {
 public:
  explicit SelfLoop(const std::string& vertex)
      : InputError("self-loop on vertex '" + vertex + "'") {}
};

class DuplicateEdge : public InputError {
 public:
  DuplicateEdge(const std::string& u, const std::string& v)
      : InputError("duplicate edge '" + u + "' -> '" + v + "'") {}
};

class ReservedVertexId : public InputError {
 public:
  explicit ReservedVertexId(const std::string& id)
      : InputError("vertex id '" + id + "' uses the reserved '__' prefix") {}
};

class UnknownVertex : public Error {
 public:
  explicit UnknownVertex(const std::string& id) : Error("unknown vertex '" + id + "'") {}
};

class TooLargeForOracle : public Error {
 public:
  TooLargeForOracle(std::size_t n, std::size_t limit)
      : Error("graph has " + std::to_string(n) + " vertices; brute-force oracle limit is " +
              std::to_string(limit)) {}
};

class InvalidDecomposition : public Error {
 public:
  using Error::Error;
};

class ChannelOutOfRange : public Error {
 public:
  ChannelOutOfRange(std::size_t channel, std::size_t k)
      : Error("channel " + std::to_string(channel) + " out of range (k=" + std::to_string(k) + ")") {}
};

class TargetSmallerThanSize : public Error {
 public:
  TargetSmallerThanSize(std::size_t target, std::size_t size)
      : Error("cannot pad a decomposition of size " + std::to_string(size) + " down to " +
              std::to_string(target)) {}
};

class NotAPartition : public Error {
 public:
  using Error::Error;
};

class InvalidPartition : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class MissingVertexCoordinates : public Error {
 public:
  explicit MissingVertexCoordinates(const std::string& id)
      : Error("drawing has no coordinates for vertex '" + id + "'") {}
};

class EmptyDrawing : public Error {
 public:
  EmptyDrawing() : Error("drawing has no vertices") {}
};

class NotTwoDimensional : public Error {
 public:
  NotTwoDimensional() : Error("render requires a 2-dimensional drawing") {}
};

}  // namespace domdraw

#endif  // DOMDRAW_ERROR_HPP
