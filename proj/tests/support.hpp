// Copyright (c) 2026 The kronq authors.
// SPDX-License-Identifier: MIT
#pragma once

#include "kronq/errors.hpp"

#include <optional>

// Error code thrown by f, or nullopt if it returns normally.
template <class F>
std::optional<kronq::Errc> thrown(F&& f)
{
    try {
        f();
    } catch (const kronq::Error& e) {
        return e.code();
    }
    return std::nullopt;
}
