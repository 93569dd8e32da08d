// SPDX-FileCopyrightText: Copyright (c) 2026 ambtag contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef AMBTAG_ANALYTIC_HPP
#define AMBTAG_ANALYTIC_HPP

#include <vector>

#include "scene.hpp"
#include "types.hpp"

namespace ambtag::analytic {

using scene::OrientationAngles;

// Polarization-projection picture of the link: S and R are the unit electric
// field / dipole axes of source and reader; the tag axis T couples the two.
struct ProjectionModel {
  Vec3 s_axis;
  Vec3 r_axis;

  static ProjectionModel from_orientations(const OrientationAngles& source,
                                           const OrientationAngles& reader);
};

double direct_projection(const ProjectionModel& m);                      // S.R
double backscatter_projection(const ProjectionModel& m, const Vec3& t);  // (S.T)(T.R)

struct ClosedFormResult {
  OrientationAngles tag;
  bool shifted_branch_tie = false;  // 90-degree-shifted branch scores within 1e-9
};

// Closed-form optimum tag orientation for a vertical source (phi_s = 0):
// theta_t = theta_r, phi_t = phi_r / 2 (principal branch). Throws
// Error(unsupported) when the source is not vertical.
ClosedFormResult closed_form_best_orientation(const OrientationAngles& source,
                                              const OrientationAngles& reader);

struct ExhaustiveResult {
  OrientationAngles tag;
  double objective = 0.0;  // |(S.T)(T.R)| at the argmax
};

// Grid argmax of |backscatter_projection|; ties resolved toward the lowest
// (phi index, theta index).
ExhaustiveResult exhaustive_best_orientation(const ProjectionModel& m,
                                             const std::vector<double>& phi_grid_deg,
                                             const std::vector<double>& theta_grid_deg);

// |axis(a) . axis(b)| - dipole axes are sign-free
double orientation_match(const OrientationAngles& a, const OrientationAngles& b);

std::vector<double> degree_range(double lo, double hi, double step);

}  // namespace ambtag::analytic

#endif
