// SPDX-FileCopyrightText: Copyright (c) 2026 ambtag contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef AMBTAG_SWEEP_HPP
#define AMBTAG_SWEEP_HPP

#include <functional>
#include <string>
#include <vector>

#include "metrics.hpp"
#include "scene.hpp"
#include "solver.hpp"
#include "types.hpp"

namespace ambtag::sweep {

using scene::OrientationAngles;
using scene::PolarizationSet;

// Runs f(0..n-1) on up to `threads` workers. Each index writes its own output
// slot, so results do not depend on scheduling.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& f);

struct GridSpec {
  double x_min = 0.0, x_max = 0.0;
  double y_min = 0.0, y_max = 0.0;
  double step = 0.0;
  double z_fixed = 0.0;

  int nx() const { return static_cast<int>(std::floor((x_max - x_min) / step + 1e-9)) + 1; }
  int ny() const { return static_cast<int>(std::floor((y_max - y_min) / step + 1e-9)) + 1; }
  double x(int ix) const { return x_min + step * ix; }
  double y(int iy) const { return y_min + step * iy; }
};

void validate(const GridSpec& g);

// Values below the floor (including an exact zero contrast) clamp to this dB
// level so map cells stay finite.
inline constexpr double kDeltaSnrFloorDb = -400.0;

struct ContrastMap {
  GridSpec grid;
  std::vector<OrientationAngles> orientations;   // one layer per entry
  std::vector<std::vector<double>> layers;       // [orient][iy*nx+ix], dB
  std::vector<char> mask;                        // 1 = cell violates distance rules
  double snr_tx_db = 0.0;

  int cell(int ix, int iy) const { return iy * grid.nx() + ix; }
};

// Contrast map over tag positions: for every unmasked cell and orientation the
// tag block is re-solved against the shared environment factorization.
// Orientations whose axes coincide share one solver run.
ContrastMap contrast_map(const mom::EnvSolver& env, const GridSpec& grid,
                         const PolarizationSet& pols, const metrics::LinkBudget& budget,
                         int threads = 0);

struct BestPolarizationMap {
  GridSpec grid;
  std::vector<double> best_delta_snr_db;  // exact cellwise max
  std::vector<int> best_index;            // lowest layer index within 1e-10 rel of the max
  std::vector<OrientationAngles> orientations;
  std::vector<char> mask;
};

BestPolarizationMap best_polarization(const ContrastMap& m);

// Grid points at the reader's height whose planar distance to the reader lies
// strictly inside (lambda/2, 3 lambda).
std::vector<Vec3> coverage_positions(const Vec3& reader, double lambda, double step = 0.001);

// Shared solver outputs over the coverage annulus: one run per (position,
// unique axis), reused by every requested polarization set and every SNR
// point (the 1 V feed results rescale exactly).
struct CoverageSweep {
  std::vector<Vec3> positions;                 // annulus points passing the distance rules
  std::vector<OrientationAngles> unique_axes;
  std::vector<std::vector<double>> delta_p;    // [axis][pos], watts at 1 V feed
  std::vector<std::vector<double>> p_off;      // [axis][pos]
  double p_source_ref_w = 0.0;
  int masked_positions = 0;
  std::vector<std::vector<int>> set_axis_index;  // per requested set: orientation -> axis
};

CoverageSweep coverage_sweep(const mom::EnvSolver& env,
                             const std::vector<const PolarizationSet*>& sets,
                             double coverage_step_m, int threads = 0);

struct OutageCurve {
  std::string label;
  std::vector<double> snr_tx_db;
  std::vector<double> outage;
};

OutageCurve outage_curve(const CoverageSweep& cs, std::size_t set_slot, const std::string& label,
                         const std::vector<double>& snr_tx_db,
                         const metrics::DetectionThreshold& threshold, double p_noise_w);

struct CapturedCurve {
  std::string label;
  std::vector<double> snr_tx_db;
  std::vector<double> captured_db;
};

CapturedCurve snr_captured_curve(const CoverageSweep& cs, std::size_t set_slot,
                                 const std::string& label, const std::vector<double>& snr_tx_db,
                                 double p_noise_w);

// true when every axis of `a` appears in `b` (set nesting up to axis identity)
bool axis_subset(const PolarizationSet& a, const PolarizationSet& b);

std::vector<double> snr_range(double lo_db, double hi_db, double step_db);

}  // namespace ambtag::sweep

#endif
