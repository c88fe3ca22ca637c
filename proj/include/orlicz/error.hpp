#ifndef ORLICZ_ERROR_HPP
#define ORLICZ_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orlicz {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// An iterative solver hit its iteration cap.
class NonConvergence : public Error {
public:
  using Error::Error;
};

/// A cube or cell carries zero weight where a positive mass is required.
class ZeroMass : public Error {
public:
  ZeroMass(const std::string& what, std::size_t cell)
      : Error(what), cell_(cell) {}
  std::size_t cell() const noexcept { return cell_; }

private:
  std::size_t cell_;
};

class TauOutOfRange : public Error {
public:
  using Error::Error;
};

/// The finite domain ran out of room before the requested number of cubes.
class DomainExhausted : public Error {
public:
  DomainExhausted(const std::string& what, std::size_t found)
      : Error(what), found_(found) {}
  std::size_t found() const noexcept { return found_; }

private:
  std::size_t found_;
};

class ConfigError : public Error {
public:
  ConfigError(const std::string& what, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

private:
  int line_;
};

}  // namespace orlicz

#endif
