#pragma once

#include <string>
#include <string_view>

#include "error.hpp"

namespace rcsskit {

// Cursor over one line of s-expression text. Atoms are delimited by
// whitespace and parentheses; a double-quoted string is a single atom
// including its quotes. Parse failures throw ParseError carrying the
// line number and character offset.
class TokenCursor {
public:
    explicit TokenCursor(std::string_view text, std::size_t line_no = 0)
        : text_(text), line_(line_no) {}

    std::size_t pos() const { return pos_; }

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    bool at_open() {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == '(';
    }

    bool at_close() {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == ')';
    }

    void expect_open() {
        if (!at_open()) fail("expected '('");
        ++pos_;
    }

    void expect_close() {
        if (!at_close()) fail("expected ')'");
        ++pos_;
    }

    void expect_end() {
        if (!at_end()) fail("trailing text");
    }

    /// Next atom; quoted strings are returned verbatim, quotes included.
    std::string_view atom();

    double number();
    long long integer();
    unsigned long long hex();  // accepts 0x-prefixed or bare hex digits

    /// Skips one balanced clause or one atom.
    void skip_clause();

    std::string_view rest() const { return text_.substr(pos_); }

    [[noreturn]] void fail(const std::string& reason) const {
        throw ParseError(reason, line_, pos_);
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() &&
               (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r'))
            ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 0;
};

} // namespace rcsskit
