// SPDX-FileCopyrightText: Copyright (c) 2026 ambtag contributors
// SPDX-License-Identifier: Apache-2.0

#include "sweep.hpp"

#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <thread>

namespace ambtag::sweep {

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& f) {
  if (n == 0) return;
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  const unsigned want = threads > 0 ? static_cast<unsigned>(threads) : hw;
  const unsigned nt = static_cast<unsigned>(std::min<std::size_t>(want, n));
  if (nt <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        f(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        next.store(n);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < nt; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

void validate(const GridSpec& g) {
  if (!(g.step > 0.0)) throw Error(ErrCode::invalid_argument, "grid step must be > 0");
  if (g.x_max < g.x_min || g.y_max < g.y_min)
    throw Error(ErrCode::invalid_argument, "grid extents must be non-empty");
}

namespace {

// Orientations are deduplicated through a quantized canonical axis so that
// equivalent entries (e.g. any theta at phi = 0, or the 180-degree seams)
// share one solver run and produce bitwise identical layers.
std::pair<long, long> axis_key(const OrientationAngles& o) {
  const OrientationAngles c = scene::axis_to_orientation(scene::orientation_to_axis(o));
  long qphi = std::lround(c.phi_deg * 1e6);
  long qtheta = std::lround(c.theta_deg * 1e6);
  const long half = 180000000;
  if (qtheta >= half) {
    qtheta -= half;
    qphi = half - qphi;
  }
  if (qphi == 0 || qphi == half) return {0, 0};
  return {qphi, qtheta};
}

struct AxisIndexer {
  std::vector<OrientationAngles> unique;
  std::map<std::pair<long, long>, int> by_key;

  int add(const OrientationAngles& o) {
    const auto key = axis_key(o);
    auto it = by_key.find(key);
    if (it != by_key.end()) return it->second;
    const int idx = static_cast<int>(unique.size());
    unique.push_back(o);
    by_key.emplace(key, idx);
    return idx;
  }
};

}  // namespace

ContrastMap contrast_map(const mom::EnvSolver& env, const GridSpec& grid,
                         const PolarizationSet& pols, const metrics::LinkBudget& budget,
                         int threads) {
  validate(grid);
  if (pols.orientations.empty())
    throw Error(ErrCode::invalid_argument, "polarization set must be non-empty");

  AxisIndexer axes;
  std::vector<int> axis_of(pols.orientations.size());
  for (std::size_t i = 0; i < pols.orientations.size(); ++i)
    axis_of[i] = axes.add(pols.orientations[i]);
  const int n_axes = static_cast<int>(axes.unique.size());

  const int nx = grid.nx(), ny = grid.ny();
  const std::size_t n_cells = static_cast<std::size_t>(nx) * ny;

  ContrastMap out;
  out.grid = grid;
  out.orientations = pols.orientations;
  out.mask.assign(n_cells, 0);
  out.snr_tx_db = budget.snr_tx_db;

  std::vector<std::size_t> active;
  for (int iy = 0; iy < ny; ++iy)
    for (int ix = 0; ix < nx; ++ix) {
      const std::size_t c = static_cast<std::size_t>(iy) * nx + ix;
      const Vec3 pos{grid.x(ix), grid.y(iy), grid.z_fixed};
      if (env.pose_allowed(pos))
        active.push_back(c);
      else
        out.mask[c] = 1;
    }
  if (active.empty())
    throw Error(ErrCode::infeasible, "every grid cell violates the distance rules");

  std::vector<std::vector<double>> dp(n_axes, std::vector<double>(n_cells, 0.0));
  parallel_for(active.size() * n_axes, threads, [&](std::size_t w) {
    const std::size_t cell = active[w / n_axes];
    const int axis = static_cast<int>(w % n_axes);
    const int ix = static_cast<int>(cell % nx), iy = static_cast<int>(cell / nx);
    const Vec3 pos{grid.x(ix), grid.y(iy), grid.z_fixed};
    const mom::TagRun r = env.run(pos, axes.unique[axis]);
    dp[axis][cell] = metrics::delta_power(r.p_on, r.p_off);
  });

  out.layers.assign(pols.orientations.size(), std::vector<double>(n_cells, kDeltaSnrFloorDb));
  for (std::size_t o = 0; o < pols.orientations.size(); ++o)
    for (std::size_t c : active) {
      const double ds = metrics::delta_snr(dp[axis_of[o]][c], budget);
      out.layers[o][c] =
          ds > 0.0 ? std::max(metrics::to_db(ds), kDeltaSnrFloorDb) : kDeltaSnrFloorDb;
    }
  return out;
}

BestPolarizationMap best_polarization(const ContrastMap& m) {
  if (m.layers.empty()) throw Error(ErrCode::invalid_argument, "contrast map has no layers");
  BestPolarizationMap out;
  out.grid = m.grid;
  out.orientations = m.orientations;
  out.mask = m.mask;
  const std::size_t n_cells = m.layers[0].size();
  out.best_delta_snr_db.assign(n_cells, kDeltaSnrFloorDb);
  out.best_index.assign(n_cells, 0);
  for (std::size_t c = 0; c < n_cells; ++c) {
    double best = m.layers[0][c];
    for (std::size_t o = 1; o < m.layers.size(); ++o) best = std::max(best, m.layers[o][c]);
    // lowest index within a relative whisker of the max; solver noise on
    // exactly degenerate orientations must not flip the reported winner
    const double tol = 1e-10 * std::abs(best);
    int idx = 0;
    for (std::size_t o = 0; o < m.layers.size(); ++o)
      if (m.layers[o][c] >= best - tol) {
        idx = static_cast<int>(o);
        break;
      }
    out.best_delta_snr_db[c] = best;
    out.best_index[c] = idx;
  }
  return out;
}

std::vector<Vec3> coverage_positions(const Vec3& reader, double lambda, double step) {
  if (!(step > 0.0)) throw Error(ErrCode::invalid_argument, "coverage step must be > 0");
  const double r_lo = 0.5 * lambda, r_hi = 3.0 * lambda;
  const int n = static_cast<int>(std::ceil(r_hi / step));
  std::vector<Vec3> out;
  for (int beta = -n; beta <= n; ++beta)
    for (int alpha = -n; alpha <= n; ++alpha) {
      const double dx = alpha * step, dy = beta * step;
      const double d = std::hypot(dx, dy);
      if (d > r_lo && d < r_hi)
        out.push_back({reader.x + dx, reader.y + dy, reader.z});
    }
  return out;
}

CoverageSweep coverage_sweep(const mom::EnvSolver& env,
                             const std::vector<const PolarizationSet*>& sets,
                             double coverage_step_m, int threads) {
  if (sets.empty()) throw Error(ErrCode::invalid_argument, "no polarization sets given");

  AxisIndexer axes;
  CoverageSweep cs;
  cs.set_axis_index.resize(sets.size());
  for (std::size_t s = 0; s < sets.size(); ++s) {
    if (sets[s]->orientations.empty())
      throw Error(ErrCode::invalid_argument, "polarization set must be non-empty");
    for (const auto& o : sets[s]->orientations)
      cs.set_axis_index[s].push_back(axes.add(o));
  }
  cs.unique_axes = axes.unique;
  cs.p_source_ref_w = env.source_power_ref();

  const auto annulus =
      coverage_positions(env.scene().reader.center, env.wavelength(), coverage_step_m);
  for (const auto& p : annulus) {
    if (env.pose_allowed(p))
      cs.positions.push_back(p);
    else
      ++cs.masked_positions;
  }
  if (cs.positions.empty())
    throw Error(ErrCode::infeasible, "no valid coverage positions (step too coarse or fully masked)");

  const std::size_t n_axes = cs.unique_axes.size();
  const std::size_t n_pos = cs.positions.size();
  cs.delta_p.assign(n_axes, std::vector<double>(n_pos, 0.0));
  cs.p_off.assign(n_axes, std::vector<double>(n_pos, 0.0));
  parallel_for(n_pos * n_axes, threads, [&](std::size_t w) {
    const std::size_t pos = w / n_axes;
    const std::size_t axis = w % n_axes;
    const mom::TagRun r = env.run(cs.positions[pos], cs.unique_axes[axis]);
    cs.delta_p[axis][pos] = metrics::delta_power(r.p_on, r.p_off);
    cs.p_off[axis][pos] = r.p_off;
  });
  return cs;
}

OutageCurve outage_curve(const CoverageSweep& cs, std::size_t set_slot, const std::string& label,
                         const std::vector<double>& snr_tx_db,
                         const metrics::DetectionThreshold& threshold, double p_noise_w) {
  if (snr_tx_db.empty()) throw Error(ErrCode::invalid_argument, "empty SNR range");
  metrics::validate(threshold);
  const auto& axis_idx = cs.set_axis_index.at(set_slot);

  // best contrast per position over the set (selection happens on the 1 V
  // solver outputs; the per-SNR rescale is monotone so the argmax is shared)
  std::vector<double> best_dp(cs.positions.size(), 0.0);
  for (std::size_t p = 0; p < cs.positions.size(); ++p) {
    double best = 0.0;
    for (int a : axis_idx) best = std::max(best, cs.delta_p[a][p]);
    best_dp[p] = best;
  }

  OutageCurve out;
  out.label = label;
  out.snr_tx_db = snr_tx_db;
  for (double snr : snr_tx_db) {
    const metrics::LinkBudget b = metrics::make_budget(snr, p_noise_w, cs.p_source_ref_w);
    std::vector<double> ds_db(best_dp.size());
    for (std::size_t p = 0; p < best_dp.size(); ++p) {
      const double ds = metrics::delta_snr(best_dp[p], b);
      ds_db[p] = ds > 0.0 ? metrics::to_db(ds) : kDeltaSnrFloorDb;
    }
    out.outage.push_back(metrics::outage_probability(ds_db, threshold));
  }
  return out;
}

CapturedCurve snr_captured_curve(const CoverageSweep& cs, std::size_t set_slot,
                                 const std::string& label, const std::vector<double>& snr_tx_db,
                                 double p_noise_w) {
  if (snr_tx_db.empty()) throw Error(ErrCode::invalid_argument, "empty SNR range");
  const auto& axis_idx = cs.set_axis_index.at(set_slot);
  std::vector<double> samples;
  samples.reserve(axis_idx.size() * cs.positions.size());
  for (int a : axis_idx)
    for (double v : cs.p_off[a]) samples.push_back(v);

  CapturedCurve out;
  out.label = label;
  out.snr_tx_db = snr_tx_db;
  for (double snr : snr_tx_db) {
    const metrics::LinkBudget b = metrics::make_budget(snr, p_noise_w, cs.p_source_ref_w);
    out.captured_db.push_back(metrics::snr_captured_db(samples, b));
  }
  return out;
}

bool axis_subset(const PolarizationSet& a, const PolarizationSet& b) {
  AxisIndexer keys;
  for (const auto& o : b.orientations) keys.add(o);
  const std::size_t nb = keys.unique.size();
  for (const auto& o : a.orientations) {
    if (static_cast<std::size_t>(keys.add(o)) >= nb) return false;
  }
  return true;
}

std::vector<double> snr_range(double lo_db, double hi_db, double step_db) {
  if (!(step_db > 0.0)) throw Error(ErrCode::invalid_argument, "SNR step must be > 0");
  if (hi_db < lo_db) throw Error(ErrCode::invalid_argument, "SNR range must be non-empty");
  std::vector<double> out;
  const long n = std::lround(std::floor((hi_db - lo_db) / step_db + 1e-9));
  for (long i = 0; i <= n; ++i) out.push_back(lo_db + step_db * static_cast<double>(i));
  return out;
}

}  // namespace ambtag::sweep
