#pragma once

#include <stdexcept>
#include <string>

namespace pairmds {

enum class Errc {
    NotPrime,
    ReducibleModulus,
    DegreeMismatch,
    FieldTooLarge,
    FieldMismatch,
    DivisionByZero,
    NoSuchRoot,
    SingularMatrix,
    DimensionMismatch,
    IndexOutOfRange,
    RankDeficientParity,
    DuplicatePoints,
    BadRedundancy,
    EnumerationTooLarge,
    ZeroCode,
    ShapeError,
    RankDeficientA,
    NonSquareA,
    SingularA,
    NotNsc,
    MissingConstituentParity,
    TooShort,
    TooLong,
    BoundViolation,
    SizeMismatch,
    InadmissibleParameters,
    VerificationFailed,
    MalformedFile,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::ReducibleModulus: return "ReducibleModulus";
        case Errc::DegreeMismatch: return "DegreeMismatch";
        case Errc::FieldTooLarge: return "FieldTooLarge";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::NoSuchRoot: return "NoSuchRoot";
        case Errc::SingularMatrix: return "SingularMatrix";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::IndexOutOfRange: return "IndexOutOfRange";
        case Errc::RankDeficientParity: return "RankDeficientParity";
        case Errc::DuplicatePoints: return "DuplicatePoints";
        case Errc::BadRedundancy: return "BadRedundancy";
        case Errc::EnumerationTooLarge: return "EnumerationTooLarge";
        case Errc::ZeroCode: return "ZeroCode";
        case Errc::ShapeError: return "ShapeError";
        case Errc::RankDeficientA: return "RankDeficientA";
        case Errc::NonSquareA: return "NonSquareA";
        case Errc::SingularA: return "SingularA";
        case Errc::NotNsc: return "NotNsc";
        case Errc::MissingConstituentParity: return "MissingConstituentParity";
        case Errc::TooShort: return "TooShort";
        case Errc::TooLong: return "TooLong";
        case Errc::BoundViolation: return "BoundViolation";
        case Errc::SizeMismatch: return "SizeMismatch";
        case Errc::InadmissibleParameters: return "InadmissibleParameters";
        case Errc::VerificationFailed: return "VerificationFailed";
        case Errc::MalformedFile: return "MalformedFile";
    }
    return "UnknownError";
}

/// All library failures surface as Error; code() distinguishes them for callers
/// that map failures to exit codes or test expectations.
class Error : public std::runtime_error {
   public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const noexcept { return code_; }

   private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, Errc code, const std::string& what) {
    if (!ok) raise(code, what);
}

}  // namespace pairmds
