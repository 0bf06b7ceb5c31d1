#include "entlab/error.hpp"

namespace entlab {

std::string_view to_string(ErrorKind kind) noexcept {
    switch(kind) {
        case ErrorKind::NotSquare: return "NotSquare";
        case ErrorKind::NotHermitian: return "NotHermitian";
        case ErrorKind::NoConvergence: return "NoConvergence";
        case ErrorKind::SizeOverflow: return "SizeOverflow";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::NonFinite: return "NonFinite";
        case ErrorKind::InvalidState: return "InvalidState";
        case ErrorKind::ZeroVector: return "ZeroVector";
        case ErrorKind::MultiBlockUnsupported: return "MultiBlockUnsupported";
        case ErrorKind::RankExceedsDim: return "RankExceedsDim";
        case ErrorKind::NotNormalized: return "NotNormalized";
        case ErrorKind::AlphaInvalid: return "AlphaInvalid";
        case ErrorKind::NotMultiple: return "NotMultiple";
        case ErrorKind::MarginalViolation: return "MarginalViolation";
        case ErrorKind::NTooSmall: return "NTooSmall";
        case ErrorKind::UniformSpectrum: return "UniformSpectrum";
        case ErrorKind::DegenerateSpectrum: return "DegenerateSpectrum";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

} // namespace entlab
