#include "dwind/cli/parse.hpp"

#include <cctype>
#include <limits>
#include <vector>

namespace dwind::cli {

ParseError::ParseError(const std::string& message, std::size_t position)
    : ValidationError("parse error at position " + std::to_string(position) + ": " + message), position_(position) {}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    KnotExpression parse() {
        std::vector<Summand> summands;
        term(summands);
        while (peek() == '#') {
            ++pos_;
            term(summands);
        }
        if (peek() != '\0') fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return KnotExpression(std::move(summands));
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    int integer() {
        skip_space();
        const std::size_t start = pos_;
        long long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > std::numeric_limits<int>::max()) {
                pos_ = start;
                fail("integer out of range");
            }
            ++pos_;
        }
        if (pos_ == start) fail("expected an integer");
        return static_cast<int>(value);
    }

    void term(std::vector<Summand>& out) {
        bool mirrored = false;
        if (peek() == '-') {
            mirrored = true;
            ++pos_;
        }
        const char c = peek();
        if (c == 'U') {
            ++pos_;
            return;
        }
        if (c != 'T') fail("expected 'T(p,q)' or 'U'");
        const std::size_t start = pos_;
        ++pos_;
        expect('(');
        const int p = integer();
        expect(',');
        const int q = integer();
        expect(')');
        try {
            out.push_back(Summand{TorusKnot(p, q), mirrored});
        } catch (const ValidationError& e) {
            throw ParseError(e.what(), start);
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

KnotExpression parse_knot_expr(std::string_view text) { return Parser(text).parse(); }

}  // namespace dwind::cli
