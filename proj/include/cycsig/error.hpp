#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cycsig {

enum class Errc {
    CompositeP,
    BadExponent,
    BadDegree,
    LengthMismatch,
    ZeroArgument,
    RankOutOfRange,
    NonRationalCoefficient,
    NotSquarefree,
    PrecisionExhausted,
    VanishesAtRoot,
    SyntaxError,
    ZeroExpression,
    ParseError,
    InconsistentParities,
    Contradiction,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
/// `position` is meaningful for SyntaxError (0-based offset into the input)
/// and for ParseError (1-based line number); otherwise it is 0.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what, std::size_t position = 0);

    Errc code() const noexcept { return code_; }
    std::size_t position() const noexcept { return position_; }

private:
    Errc code_;
    std::size_t position_;
};

} // namespace cycsig
