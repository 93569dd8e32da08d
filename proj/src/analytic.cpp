// SPDX-FileCopyrightText: Copyright (c) 2026 ambtag contributors
// SPDX-License-Identifier: Apache-2.0

#include "analytic.hpp"

#include <cmath>

namespace ambtag::analytic {

ProjectionModel ProjectionModel::from_orientations(const OrientationAngles& source,
                                                   const OrientationAngles& reader) {
  return {scene::orientation_to_axis(source), scene::orientation_to_axis(reader)};
}

double direct_projection(const ProjectionModel& m) { return m.s_axis.dot(m.r_axis); }

double backscatter_projection(const ProjectionModel& m, const Vec3& t) {
  return m.s_axis.dot(t) * t.dot(m.r_axis);
}

ClosedFormResult closed_form_best_orientation(const OrientationAngles& source,
                                              const OrientationAngles& reader) {
  if (source.phi_deg != 0.0)
    throw Error(ErrCode::unsupported,
                "closed form requires a vertical source (phi = 0); use exhaustive search");

  ClosedFormResult r;
  r.tag = {reader.phi_deg / 2.0, reader.theta_deg};

  const ProjectionModel m = ProjectionModel::from_orientations(source, reader);
  const double principal =
      std::abs(backscatter_projection(m, scene::orientation_to_axis(r.tag)));
  OrientationAngles shifted{r.tag.phi_deg + 90.0, r.tag.theta_deg};
  const double alt = std::abs(backscatter_projection(m, scene::orientation_to_axis(shifted)));
  r.shifted_branch_tie = std::abs(principal - alt) < 1e-9;
  return r;
}

ExhaustiveResult exhaustive_best_orientation(const ProjectionModel& m,
                                             const std::vector<double>& phi_grid_deg,
                                             const std::vector<double>& theta_grid_deg) {
  if (phi_grid_deg.empty() || theta_grid_deg.empty())
    throw Error(ErrCode::invalid_argument, "exhaustive search needs non-empty grids");

  ExhaustiveResult best;
  best.objective = -1.0;
  for (double phi : phi_grid_deg) {
    for (double theta : theta_grid_deg) {
      const OrientationAngles o{phi, theta};
      const double v = std::abs(backscatter_projection(m, scene::orientation_to_axis(o)));
      if (v > best.objective) {
        best.objective = v;
        best.tag = o;
      }
    }
  }
  return best;
}

double orientation_match(const OrientationAngles& a, const OrientationAngles& b) {
  return std::abs(scene::orientation_to_axis(a).dot(scene::orientation_to_axis(b)));
}

std::vector<double> degree_range(double lo, double hi, double step) {
  if (!(step > 0.0)) throw Error(ErrCode::invalid_argument, "step must be > 0");
  std::vector<double> out;
  const long n = std::lround(std::floor((hi - lo) / step + 1e-9));
  for (long i = 0; i <= n; ++i) out.push_back(lo + step * static_cast<double>(i));
  return out;
}

}  // namespace ambtag::analytic
