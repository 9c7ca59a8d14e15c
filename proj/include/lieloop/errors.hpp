#pragma once

#include <stdexcept>
#include <string>

namespace lieloop {

enum class ErrorKind { InvalidInput, NotPositiveDefinite, NumericalFailure };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& what) : Error(ErrorKind::InvalidInput, what) {}
};

class NotPositiveDefinite : public Error {
 public:
  explicit NotPositiveDefinite(const std::string& what)
      : Error(ErrorKind::NotPositiveDefinite, what) {}
};

class NumericalFailure : public Error {
 public:
  explicit NumericalFailure(const std::string& what) : Error(ErrorKind::NumericalFailure, what) {}
};

}  // namespace lieloop
