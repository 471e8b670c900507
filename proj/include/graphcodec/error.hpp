#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gcodec {

// Base type for everything the library throws.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Caller-side precondition violation (bad node id, bad parameter, ...).
class ArgumentError : public Error {
public:
  using Error::Error;
};

// Malformed textual input. position() is the character index for
// instruction strings and the 1-based line number for edge lists.
class ParseError : public Error {
public:
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg), position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// The graph cannot be encoded (unreachable node, no valid start).
class EncodeError : public Error {
public:
  using Error::Error;
};

// A size cap, search budget, or time limit ran out. Carries the best
// string found so far when the failing computation had one.
class ResourceError : public Error {
public:
  explicit ResourceError(const std::string& msg) : Error(msg) {}
  ResourceError(const std::string& msg, std::string best_so_far,
                std::size_t explored)
      : Error(msg), best_(std::move(best_so_far)), explored_(explored),
        has_best_(true) {}

  bool has_best() const { return has_best_; }
  const std::string& best_so_far() const { return best_; }
  std::size_t explored() const { return explored_; }

private:
  std::string best_;
  std::size_t explored_ = 0;
  bool has_best_ = false;
};

// Statistics requested on data that does not determine them
// (constant coordinate, too few points after filtering).
class DegenerateDataError : public Error {
public:
  using Error::Error;
};

} // namespace gcodec
