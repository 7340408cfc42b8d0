#pragma once

#include <stdexcept>
#include <string>

namespace hpt {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::string msg, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& detail() const { return detail_; }

 private:
  std::string detail_;
  int line_;
  int column_;
};

// Multiplying two families that both carry an [N+c] atom.
class BracketProduct : public Error {
 public:
  using Error::Error;
};

class HalfIntegerT : public Error {
 public:
  using Error::Error;
};

// Evaluating [N+c] at an N where N+c < 0.
class BracketDomain : public Error {
 public:
  using Error::Error;
};

class AssemblyError : public Error {
 public:
  using Error::Error;
};

class DuplicateName : public Error {
 public:
  using Error::Error;
};

class UnknownRecord : public Error {
 public:
  using Error::Error;
};

class DataError : public Error {
 public:
  using Error::Error;
};

class StageMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace hpt
