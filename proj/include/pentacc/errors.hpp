#ifndef PENTACC_ERRORS_HPP
#define PENTACC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pentacc {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByIntervalContainingZero : Error {
    DivisionByIntervalContainingZero() : Error("division by interval containing zero") {}
};

struct NegativeRadicand : Error {
    explicit NegativeRadicand(const std::string& what) : Error("negative radicand: " + what) {}
};

struct InexactDivision : Error {
    InexactDivision() : Error("polynomial division left a nonzero remainder") {}
};

struct ZeroPolynomial : Error {
    ZeroPolynomial() : Error("operation undefined for the zero polynomial") {}
};

struct NotSquarefree : Error {
    NotSquarefree() : Error("polynomial is not squarefree on the requested range") {}
};

struct NotPerfectSquare : Error {
    NotPerfectSquare() : Error("polynomial is not a perfect square") {}
};

struct NotReciprocal : Error {
    NotReciprocal() : Error("polynomial is not reciprocal") {}
};

struct OddDegree : Error {
    OddDegree() : Error("reciprocal reduction needs even degree") {}
};

struct DegenerateInput : Error {
    explicit DegenerateInput(const std::string& what) : Error("degenerate input: " + what) {}
};

struct UnboundSymbol : Error {
    explicit UnboundSymbol(const std::string& sym) : Error("unbound symbol: " + sym) {}
};

struct DenominatorZero : Error {
    DenominatorZero() : Error("denominator evaluates to zero") {}
};

struct OutOfBranchDomain : Error {
    OutOfBranchDomain() : Error("y5 outside the domain of the requested branch") {}
};

struct DegeneratePentagon : Error {
    explicit DegeneratePentagon(const std::string& what) : Error("degenerate pentagon: " + what) {}
};

struct SingularDenominator : Error {
    explicit SingularDenominator(const std::string& what)
        : Error("mass denominator interval contains zero: " + what) {}
};

struct IntegrityError : Error {
    explicit IntegrityError(const std::string& what) : Error("integrity failure: " + what) {}
};

struct AppendixMismatch : IntegrityError {
    explicit AppendixMismatch(const std::string& what)
        : IntegrityError("derived/embedded mismatch: " + what) {}
};

struct PeelFailure : IntegrityError {
    explicit PeelFailure(const std::string& factor)
        : IntegrityError("claimed factor does not divide: " + factor) {}
};

struct ExtractionAmbiguous : IntegrityError {
    ExtractionAmbiguous() : IntegrityError("reciprocal-factor extraction ambiguous") {}
};

struct WrongRootCount : IntegrityError {
    explicit WrongRootCount(const std::string& what)
        : IntegrityError("unexpected root count: " + what) {}
};

struct CrossCheckMismatch : IntegrityError {
    explicit CrossCheckMismatch(const std::string& what)
        : IntegrityError("cross-check mismatch: " + what) {}
};

struct MissingCertificate : Error {
    explicit MissingCertificate(const std::string& path)
        : Error("certificate not found: " + path) {}
};

struct UnknownTarget : Error {
    explicit UnknownTarget(const std::string& t) : Error("unknown target: " + t) {}
};

}  // namespace pentacc

#endif
