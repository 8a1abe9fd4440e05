#include "cycsig/error.hpp"

namespace cycsig {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::CompositeP: return "CompositeP";
    case Errc::BadExponent: return "BadExponent";
    case Errc::BadDegree: return "BadDegree";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::ZeroArgument: return "ZeroArgument";
    case Errc::RankOutOfRange: return "RankOutOfRange";
    case Errc::NonRationalCoefficient: return "NonRationalCoefficient";
    case Errc::NotSquarefree: return "NotSquarefree";
    case Errc::PrecisionExhausted: return "PrecisionExhausted";
    case Errc::VanishesAtRoot: return "VanishesAtRoot";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::ZeroExpression: return "ZeroExpression";
    case Errc::ParseError: return "ParseError";
    case Errc::InconsistentParities: return "InconsistentParities";
    case Errc::Contradiction: return "Contradiction";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& what, std::size_t position)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what),
      code_(code), position_(position) {}

} // namespace cycsig
