// Copyright (c) 2026 The kronq authors.
// SPDX-License-Identifier: MIT
#pragma once

#include <stdexcept>
#include <string>

namespace kronq {

enum class Errc {
    MutationAtFrozen,
    UnknownVertex,
    NotAWeightConfig,
    SizeTooSmall,
    OutOfRange,
    WeightConfigInconsistent,
    UnsupportedDiamond,
    WeightRoutesDisagree,
    IndexOutOfRange,
    NonSquare,
    DegenerateSample,
    NotBoundaryFrozen,
    ArrowMissing,
    UnboundedFibre,
    SizeMismatch,
    LengthExceedsL,
    LengthExceedsM,
    SizeTooLargeForOracle,
    BadInput,
};

const char* errc_name(Errc c) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what);
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace kronq
