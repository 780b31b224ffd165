// Copyright (c) 2026 The kronq authors.
// SPDX-License-Identifier: MIT
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

namespace kronq {

using ZMatrix = std::vector<std::vector<mpz_class>>;
using QMatrix = std::vector<std::vector<mpq_class>>;

ZMatrix identity(std::size_t n);
ZMatrix matmul(const ZMatrix& a, const ZMatrix& b);

// Fraction-free Gaussian elimination; the matrix must be square.
mpz_class det_bareiss(ZMatrix a);

std::size_t rank(QMatrix a);

// Solves a x = b for square nonsingular a; nullopt if a is singular.
std::optional<QMatrix> solve(QMatrix a, QMatrix b);

}  // namespace kronq
