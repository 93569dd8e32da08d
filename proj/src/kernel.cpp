// SPDX-FileCopyrightText: Copyright (c) 2026 ambtag contributors
// SPDX-License-Identifier: Apache-2.0

#include "kernel.hpp"

#include <algorithm>
#include <cmath>

#include "quadrature.hpp"

namespace ambtag::mom {

cplx reduced_green(const Vec3& p, const Vec3& q, double k, double aeff2) {
  const double R = std::sqrt((p - q).norm2() + aeff2);
  return std::polar(1.0 / R, -k * R);
}

namespace {

// integral of g over one segment seen from a fixed point, split as
// INT (exp(-jkR)-1)/R  (smooth, fixed Gauss)  +  INT 1/R  (closed form)
cplx line_integral(const Vec3& p, const WireSegment& seg, double k, double aeff2) {
  const Vec3 w = seg.end - seg.start;
  const double L = w.norm();
  const Vec3 u = w * (1.0 / L);
  const Vec3 rel = p - seg.start;
  const double s0 = rel.dot(u);
  const double h2 = std::max(rel.norm2() - s0 * s0, 0.0) + aeff2;
  const double h = std::sqrt(h2);

  const double analytic = std::asinh((L - s0) / h) + std::asinh(s0 / h);

  const GaussRule& gl = gauss_rule(12);
  cplx smooth{0.0, 0.0};
  for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
    const double s = 0.5 * L * (gl.nodes[i] + 1.0);
    const double R = std::sqrt((s - s0) * (s - s0) + h2);
    const cplx e = std::polar(1.0, -k * R);
    smooth += gl.weights[i] * (e - 1.0) / R;
  }
  smooth *= 0.5 * L;
  return cplx{analytic, 0.0} + smooth;
}

cplx tensor_gauss(const WireSegment& m, const WireSegment& n, double k, double aeff2, int order) {
  const GaussRule& gl = gauss_rule(order);
  const Vec3 cm = m.center(), cn = n.center();
  const Vec3 hm = (m.end - m.start) * 0.5;
  const Vec3 hn = (n.end - n.start) * 0.5;
  cplx acc{0.0, 0.0};
  for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
    const Vec3 pi = cm + hm * gl.nodes[i];
    cplx row{0.0, 0.0};
    for (std::size_t j = 0; j < gl.nodes.size(); ++j)
      row += gl.weights[j] * reduced_green(pi, cn + hn * gl.nodes[j], k, aeff2);
    acc += gl.weights[i] * row;
  }
  return acc * (hm.norm() * hn.norm());
}

// Touching/overlapping pairs: adaptive outer integral, semi-analytic inner.
// The outer side is fixed by global index so that swapping the arguments
// evaluates the identical quadrature.
cplx near_double_integral(const WireSegment& m, const WireSegment& n, double k, double aeff2) {
  const WireSegment& outer = (m.index <= n.index) ? m : n;
  const WireSegment& inner = (m.index <= n.index) ? n : m;
  const Vec3 w = outer.end - outer.start;
  const double L = w.norm();
  const Vec3 u = w * (1.0 / L);

  auto f = [&](double s) { return line_integral(outer.start + u * s, inner, k, aeff2); };

  // scale estimate for the absolute tolerance
  const GaussRule& gl = gauss_rule(8);
  cplx coarse{0.0, 0.0};
  for (std::size_t i = 0; i < gl.nodes.size(); ++i)
    coarse += gl.weights[i] * f(0.5 * L * (gl.nodes[i] + 1.0));
  coarse *= 0.5 * L;

  const double tol = std::max(std::abs(coarse), 1e-30) * 1e-12;
  return adaptive_simpson(f, 0.0, L, tol);
}

}  // namespace

cplx mutual_impedance(const WireSegment& m, const WireSegment& n, double omega) {
  const double k = omega / kSpeedOfLight;
  const double aeff2 = m.radius * n.radius;

  const double Lm = m.length(), Ln = n.length();
  const double tdot = m.tangent().dot(n.tangent());
  const double rho = (m.center() - n.center()).norm() / std::max(Lm, Ln);

  cplx vec_potential{0.0, 0.0};
  if (tdot != 0.0) {
    if (rho >= 60.0)
      vec_potential = tensor_gauss(m, n, k, aeff2, 3);
    else if (rho >= 8.0)
      vec_potential = tensor_gauss(m, n, k, aeff2, 4);
    else if (rho >= 2.0)
      vec_potential = tensor_gauss(m, n, k, aeff2, 8);
    else
      vec_potential = near_double_integral(m, n, k, aeff2);
  }

  const cplx charge = reduced_green(m.end, n.end, k, aeff2) -
                      reduced_green(m.end, n.start, k, aeff2) -
                      reduced_green(m.start, n.end, k, aeff2) +
                      reduced_green(m.start, n.start, k, aeff2);

  const cplx c_vec{0.0, omega * kMu0 / (4.0 * kPi)};
  const cplx c_chg{0.0, -1.0 / (4.0 * kPi * omega * kEps0)};
  return c_vec * tdot * vec_potential + c_chg * charge;
}

}  // namespace ambtag::mom
