#include "curvemod/error.hpp"

namespace curvemod {

const char* err_name(Err e)
{
    switch (e) {
    case Err::ZeroInput: return "ZeroInput";
    case Err::DegreeTooLow: return "DegreeTooLow";
    case Err::SingularMatrix: return "SingularMatrix";
    case Err::ExtensionTooLarge: return "ExtensionTooLarge";
    case Err::TooFewDistinct: return "TooFewDistinct";
    case Err::DegenerateRho: return "DegenerateRho";
    case Err::EvenDegree: return "EvenDegree";
    case Err::MaxMultTooLarge: return "MaxMultTooLarge";
    case Err::NoConvergence: return "NoConvergence";
    case Err::InvalidTree: return "InvalidTree";
    case Err::BothZero: return "BothZero";
    case Err::NotAFlex: return "NotAFlex";
    case Err::NotIrreducible: return "NotIrreducible";
    case Err::WrongSingularityType: return "WrongSingularityType";
    case Err::ContainsLine: return "ContainsLine";
    case Err::MultipleComponent: return "MultipleComponent";
    case Err::PointNotOnCurve: return "PointNotOnCurve";
    case Err::CommonComponent: return "CommonComponent";
    case Err::NonIsolated: return "NonIsolated";
    case Err::ParityViolation: return "ParityViolation";
    case Err::NotSquarefree: return "NotSquarefree";
    case Err::NegativeGenus: return "NegativeGenus";
    case Err::ZeroForm: return "ZeroForm";
    case Err::NotInTower: return "NotInTower";
    case Err::NotPrime: return "NotPrime";
    case Err::InfeasiblePair: return "InfeasiblePair";
    case Err::UnknownType: return "UnknownType";
    case Err::Parse: return "ParseError";
    case Err::BadArgument: return "BadArgument";
    }
    return "Error";
}

} // namespace curvemod
