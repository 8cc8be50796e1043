#pragma once

#include <stdexcept>
#include <string>

namespace rcsskit {

// Error categories, aligned with the CLI exit codes and the C API status
// values: usage=1, parse=2, io=3, internal=4.
enum class ErrorCode { usage = 1, parse = 2, io = 3, internal = 4 };

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

// Syntax error with a 1-based line number and 0-based character offset.
class ParseError : public Error {
public:
    ParseError(const std::string& reason, std::size_t line_no = 0, std::size_t column = 0)
        : Error(ErrorCode::parse, format(reason, line_no, column)),
          line_(line_no), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    static std::string format(const std::string& reason, std::size_t line_no, std::size_t column) {
        std::string msg;
        if (line_no > 0) msg += "line " + std::to_string(line_no) + ": ";
        msg += reason;
        if (column > 0) msg += " (at offset " + std::to_string(column) + ")";
        return msg;
    }

    std::size_t line_;
    std::size_t column_;
};

} // namespace rcsskit
