// Copyright (c) 2026 The kronq authors.
// SPDX-License-Identifier: MIT
#include "kronq/errors.hpp"

namespace kronq {

const char* errc_name(Errc c) noexcept
{
    switch (c) {
    case Errc::MutationAtFrozen: return "MutationAtFrozen";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::NotAWeightConfig: return "NotAWeightConfig";
    case Errc::SizeTooSmall: return "SizeTooSmall";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::WeightConfigInconsistent: return "WeightConfigInconsistent";
    case Errc::UnsupportedDiamond: return "UnsupportedDiamond";
    case Errc::WeightRoutesDisagree: return "WeightRoutesDisagree";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NonSquare: return "NonSquare";
    case Errc::DegenerateSample: return "DegenerateSample";
    case Errc::NotBoundaryFrozen: return "NotBoundaryFrozen";
    case Errc::ArrowMissing: return "ArrowMissing";
    case Errc::UnboundedFibre: return "UnboundedFibre";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::LengthExceedsL: return "LengthExceedsL";
    case Errc::LengthExceedsM: return "LengthExceedsM";
    case Errc::SizeTooLargeForOracle: return "SizeTooLargeForOracle";
    case Errc::BadInput: return "BadInput";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
{
}

}  // namespace kronq
