// Copyright (c) 2026 The kronq authors.
// SPDX-License-Identifier: MIT
#pragma once

#include "kronq/linalg.hpp"

#include <vector>

namespace kronq {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    mpq_class value;
    std::vector<mpq_class> x;
};

// Exact dense tableau simplex for  max c.x  s.t.  A x <= b,  x >= 0.
// Phase one runs once; each objective is then optimized on a copy of the
// feasible tableau.
class Simplex {
public:
    Simplex(const QMatrix& a, const std::vector<mpq_class>& b);

    bool feasible();
    LpResult maximize(const std::vector<mpq_class>& c) const;

private:
    int m_;
    int n_;
    std::vector<int> basis_;
    std::vector<int> nonbasis_;
    QMatrix d_;
    bool phase1_done_ = false;
    bool feasible_ = false;

    void pivot(int r, int s);
    bool run(int phase);
};

}  // namespace kronq
