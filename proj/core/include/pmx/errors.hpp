#ifndef PMX_ERRORS_HPP_
#define PMX_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pmx {

//! Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

//! A generator index outside {0..rank-1}.
class InvalidGenerator : public Error {
 public:
  using Error::Error;
};

class RankMismatch : public Error {
 public:
  using Error::Error;
};

//! A vertex id or parameter outside its allowed range.
class OutOfRange : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NotConnected : public Error {
 public:
  using Error::Error;
};

//! Raised when a distinguished generator does not exist; carries the color.
class NotRegular : public Error {
 public:
  NotRegular(int color, const std::string& what) : Error(what), color_(color) {}
  int color() const noexcept { return color_; }

 private:
  int color_;
};

class NotAutomorphism : public Error {
 public:
  using Error::Error;
};

//! Group enumeration would exceed the configured element bound.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

//! A structural check (premaniplex or voltage axioms) failed.
class ValidationFailed : public Error {
 public:
  using Error::Error;
};

//! Malformed document text. line is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::string field, const std::string& what)
      : Error(what), line_(line), field_(std::move(field)) {}
  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

}  // namespace pmx

#endif  // PMX_ERRORS_HPP_
