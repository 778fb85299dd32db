#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hopi {

enum class Errc {
    UnsupportedQ,
    DivisionByZero,
    SingularMatrix,
    ShapeMismatch,
    TOutOfRange,
    ROutOfRange,
    ParamOutOfRange,
    BudgetExceeded,
    NoInformationSet,
    ParseError,
};

constexpr std::string_view to_string(Errc code) noexcept {
    switch (code) {
        case Errc::UnsupportedQ: return "UnsupportedQ";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::SingularMatrix: return "SingularMatrix";
        case Errc::ShapeMismatch: return "ShapeMismatch";
        case Errc::TOutOfRange: return "TOutOfRange";
        case Errc::ROutOfRange: return "ROutOfRange";
        case Errc::ParamOutOfRange: return "ParamOutOfRange";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::NoInformationSet: return "NoInformationSet";
        case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace hopi
