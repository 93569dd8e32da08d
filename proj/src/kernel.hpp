// SPDX-FileCopyrightText: Copyright (c) 2026 ambtag contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef AMBTAG_KERNEL_HPP
#define AMBTAG_KERNEL_HPP

#include "mesh.hpp"
#include "types.hpp"

namespace ambtag::mom {

// Mutual impedance of two pulse-basis wire segments under the reduced
// thin-wire kernel (filament current on the axis, observation regularized by
// the wire radius). Testing matches the voltage drop along the observation
// segment, which splits the entry into a vector-potential double integral and
// a scalar-potential term from the end-point charges of the current pulse:
//
//   Z_mn = j(w u0 / 4pi) (tm.tn) INT_m INT_n g  +  1/(j 4pi w e0) *
//          [g(m+,n+) - g(m+,n-) - g(m-,n+) + g(m-,n-)]
//
// with g = exp(-jkR)/R and R^2 = |p-q|^2 + am*an. Both pieces are symmetric
// in (m, n) by construction, which the solver relies on.
cplx mutual_impedance(const WireSegment& m, const WireSegment& n, double omega);

// exp(-jkR)/R with the radius-regularized distance; the far-decay oracle in
// the tests calls this directly.
cplx reduced_green(const Vec3& p, const Vec3& q, double k, double aeff2);

}  // namespace ambtag::mom

#endif
