#pragma once

#include <stdexcept>
#include <string>

namespace curvemod {

enum class Err {
    ZeroInput,
    DegreeTooLow,
    SingularMatrix,
    ExtensionTooLarge,
    TooFewDistinct,
    DegenerateRho,
    EvenDegree,
    MaxMultTooLarge,
    NoConvergence,
    InvalidTree,
    BothZero,
    NotAFlex,
    NotIrreducible,
    WrongSingularityType,
    ContainsLine,
    MultipleComponent,
    PointNotOnCurve,
    CommonComponent,
    NonIsolated,
    ParityViolation,
    NotSquarefree,
    NegativeGenus,
    ZeroForm,
    NotInTower,
    NotPrime,
    InfeasiblePair,
    UnknownType,
    Parse,
    BadArgument,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& what)
        : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
    Err code() const { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

} // namespace curvemod
