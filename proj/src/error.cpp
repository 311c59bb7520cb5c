#include "gradiv/error.hpp"

namespace gradiv {

const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::NotAQuadraticForm: return "NotAQuadraticForm";
        case ErrorCode::NotTypeIorII: return "NotTypeIorII";
        case ErrorCode::InconsistentExtension: return "InconsistentExtension";
        case ErrorCode::FormsEqual: return "FormsEqual";
        case ErrorCode::DifferentPolarizations: return "DifferentPolarizations";
        case ErrorCode::NotANiceMap: return "NotANiceMap";
        case ErrorCode::DomainTooLarge: return "DomainTooLarge";
        case ErrorCode::InvalidTriple: return "InvalidTriple";
        case ErrorCode::AmbientEmbeddingNotInjective: return "AmbientEmbeddingNotInjective";
        case ErrorCode::UnknownStructure: return "UnknownStructure";
        case ErrorCode::PolarizationMismatch: return "PolarizationMismatch";
        case ErrorCode::NotAnInvolution: return "NotAnInvolution";
        case ErrorCode::WrongComponentDimension: return "WrongComponentDimension";
        case ErrorCode::IncompatibleTensor: return "IncompatibleTensor";
        case ErrorCode::NotAnInvolutionAfterTwist: return "NotAnInvolutionAfterTwist";
        case ErrorCode::SignatureMismatch: return "SignatureMismatch";
        case ErrorCode::InvalidDatum: return "InvalidDatum";
        case ErrorCode::InvalidLabel: return "InvalidLabel";
        case ErrorCode::SecondKindImpossible: return "SecondKindImpossible";
        case ErrorCode::NotApplicableFamily: return "NotApplicableFamily";
        case ErrorCode::NotDistinguished: return "NotDistinguished";
        case ErrorCode::BadInput: return "BadInput";
    }
    return "UnknownError";
}

}  // namespace gradiv
