#pragma once

#include <stdexcept>
#include <string>

namespace hirsch {

/// Base class of every domain error raised by the library. The CLI maps these
/// to exit code 1; anything else is a bug.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class InfeasibleError : public Error {
 public:
  InfeasibleError() : Error("infeasible") {}
};

class NotPointedError : public Error {
 public:
  NotPointedError() : Error("not pointed: the polyhedron contains a line") {}
};

class DisconnectedError : public Error {
 public:
  DisconnectedError() : Error("disconnected") {}
};

/// Parameters outside an operation's domain (bad facet index, non-simple
/// vertex, unbalanced margins, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace hirsch
