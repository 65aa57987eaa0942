#ifndef PERIM_ERROR_HPP_
#define PERIM_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace perim {

  // Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed input text.  line and column are 1-based; 0 means unknown.
  class ParseError : public Error {
   public:
    ParseError(std::string const& msg, int line, int column)
        : Error(format(msg, line, column)), _line(line), _column(column) {}

    int line() const noexcept {
      return _line;
    }
    int column() const noexcept {
      return _column;
    }

   private:
    static std::string format(std::string const& msg, int line, int column) {
      if (line <= 0) {
        return msg;
      }
      return "line " + std::to_string(line) + ", column "
             + std::to_string(column) + ": " + msg;
    }
    int _line;
    int _column;
  };

  // A documented precondition of an operation does not hold.
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

}  // namespace perim

#endif  // PERIM_ERROR_HPP_
