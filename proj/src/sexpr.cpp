#include "sexpr.hpp"

#include <charconv>

namespace rcsskit {

std::string_view TokenCursor::atom() {
    if (at_end()) fail("unexpected end of line");
    std::size_t start = pos_;
    if (text_[pos_] == '(' || text_[pos_] == ')') fail("expected atom");
    if (text_[pos_] == '"') {
        ++pos_;
        while (pos_ < text_.size() && text_[pos_] != '"') ++pos_;
        if (pos_ >= text_.size()) fail("unterminated string");
        ++pos_;
        return text_.substr(start, pos_ - start);
    }
    while (pos_ < text_.size()) {
        char c = text_[pos_];
        if (c == ' ' || c == '\t' || c == '\r' || c == '(' || c == ')') break;
        ++pos_;
    }
    return text_.substr(start, pos_ - start);
}

double TokenCursor::number() {
    std::size_t at = pos_;
    std::string_view tok = atom();
    double value = 0.0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || p != tok.data() + tok.size()) {
        pos_ = at;
        fail("expected number, got '" + std::string(tok) + "'");
    }
    return value;
}

long long TokenCursor::integer() {
    std::size_t at = pos_;
    std::string_view tok = atom();
    long long value = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || p != tok.data() + tok.size()) {
        pos_ = at;
        fail("expected integer, got '" + std::string(tok) + "'");
    }
    return value;
}

unsigned long long TokenCursor::hex() {
    std::size_t at = pos_;
    std::string_view tok = atom();
    std::string_view digits = tok;
    if (digits.size() > 2 && digits[0] == '0' && (digits[1] == 'x' || digits[1] == 'X'))
        digits.remove_prefix(2);
    unsigned long long value = 0;
    auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value, 16);
    if (ec != std::errc{} || p != digits.data() + digits.size()) {
        pos_ = at;
        fail("expected hex value, got '" + std::string(tok) + "'");
    }
    return value;
}

void TokenCursor::skip_clause() {
    if (at_end()) fail("unexpected end of line");
    if (text_[pos_] != '(') {
        atom();
        return;
    }
    int depth = 0;
    while (pos_ < text_.size()) {
        char c = text_[pos_];
        if (c == '"') {
            ++pos_;
            while (pos_ < text_.size() && text_[pos_] != '"') ++pos_;
            if (pos_ >= text_.size()) fail("unterminated string");
        } else if (c == '(') {
            ++depth;
        } else if (c == ')') {
            --depth;
            if (depth == 0) {
                ++pos_;
                return;
            }
        }
        ++pos_;
    }
    fail("unbalanced clause");
}

} // namespace rcsskit
