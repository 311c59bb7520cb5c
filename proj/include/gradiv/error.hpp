#pragma once

#include <stdexcept>
#include <string>

namespace gradiv {

enum class ErrorCode {
    NotAQuadraticForm,
    NotTypeIorII,
    InconsistentExtension,
    FormsEqual,
    DifferentPolarizations,
    NotANiceMap,
    DomainTooLarge,
    InvalidTriple,
    AmbientEmbeddingNotInjective,
    UnknownStructure,
    PolarizationMismatch,
    NotAnInvolution,
    WrongComponentDimension,
    IncompatibleTensor,
    NotAnInvolutionAfterTwist,
    SignatureMismatch,
    InvalidDatum,
    InvalidLabel,
    SecondKindImpossible,
    NotApplicableFamily,
    NotDistinguished,
    BadInput,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace gradiv
