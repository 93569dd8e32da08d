// SPDX-FileCopyrightText: Copyright (c) 2026 ambtag contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef AMBTAG_QUADRATURE_HPP
#define AMBTAG_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "types.hpp"

namespace ambtag {

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

// Gauss-Legendre rule of order n, computed once and cached.
const GaussRule& gauss_rule(int n);

// Adaptive Simpson on [a, b] for a complex integrand. `tol` is absolute;
// the caller scales it from a magnitude estimate of the integral.
cplx adaptive_simpson(const std::function<cplx(double)>& f, double a, double b,
                      double tol, int max_depth = 40);

}  // namespace ambtag

#endif
