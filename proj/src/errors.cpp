#include "drinfeld/errors.hpp"

namespace drinfeld {

const char* errc_name(Errc c) noexcept {
    switch (c) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::NotIrreducible: return "NotIrreducible";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ContextMismatch: return "ContextMismatch";
    case Errc::BothZero: return "BothZero";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::ZeroPoint: return "ZeroPoint";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::TreeMismatch: return "TreeMismatch";
    case Errc::NotInSpan: return "NotInSpan";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NotSubmodule: return "NotSubmodule";
    case Errc::NotAMorphism: return "NotAMorphism";
    case Errc::NotAChain: return "NotAChain";
    case Errc::NotStabilized: return "NotStabilized";
    case Errc::InvalidModule: return "InvalidModule";
    case Errc::ParseError: return "ParseError";
    }
    return "UnknownError";
}

} // namespace drinfeld
