#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "dwind/errors.hpp"
#include "dwind/knot.hpp"

namespace dwind::cli {

/// Malformed knot expression; position is a 0-based offset into the input.
class ParseError : public ValidationError {
public:
    ParseError(const std::string& message, std::size_t position);

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// expr := term ('#' term)*
/// term := ['-'] 'T' '(' int ',' int ')' | 'U'
/// Whitespace is ignored everywhere.
KnotExpression parse_knot_expr(std::string_view text);

}  // namespace dwind::cli
