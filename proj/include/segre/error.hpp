#pragma once
#include <stdexcept>
#include <string>

namespace segre {

enum class ErrorCode {
  Input,
  Parse,
  UnsupportedInput,
  UnsupportedTerm,
  Undecided,
  NumericalFailure,
  ContourTooClose,
  Nondeterministic,
};

const char* error_code_name(ErrorCode c);

// Process exit code the CLI uses for an error class.
int exit_code_for(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int col)
      : Error(ErrorCode::Parse, msg), line_(line), col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

}  // namespace segre
