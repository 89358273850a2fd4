#pragma once

#include <stdexcept>
#include <string>

namespace drinfeld {

enum class Errc {
    NotPrime,
    NotIrreducible,
    DegreeMismatch,
    DivisionByZero,
    ContextMismatch,
    BothZero,
    ZeroInput,
    ZeroPoint,
    EmptyInput,
    TreeMismatch,
    NotInSpan,
    RankDeficient,
    TooLarge,
    NotSubmodule,
    NotAMorphism,
    NotAChain,
    NotStabilized,
    InvalidModule,
    ParseError,
};

const char* errc_name(Errc c) noexcept;

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace drinfeld
