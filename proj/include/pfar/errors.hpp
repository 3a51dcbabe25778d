#pragma once

#include <stdexcept>
#include <string>

namespace pfar {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class AssignmentIncomplete : public Error {
 public:
  using Error::Error;
};

class SameEndpoints : public Error {
 public:
  using Error::Error;
};

class PathsNotAttached : public Error {
 public:
  using Error::Error;
};

class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

class UnknownVariable : public Error {
 public:
  using Error::Error;
};

class MultiplePathsSelected : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class TooFewNodes : public Error {
 public:
  using Error::Error;
};

}  // namespace pfar
