// SPDX-FileCopyrightText: Copyright (c) 2026 ambtag contributors
// SPDX-License-Identifier: Apache-2.0

#include "metrics.hpp"

#include <algorithm>
#include <cmath>

namespace ambtag::metrics {

LinkBudget make_budget(double snr_tx_db, double p_noise_w, double p_source_ref_w) {
  if (!(p_noise_w > 0.0)) throw Error(ErrCode::invalid_argument, "noise power must be > 0");
  if (!(p_source_ref_w > 0.0))
    throw Error(ErrCode::invalid_argument, "reference source power must be > 0");
  LinkBudget b;
  b.p_noise_w = p_noise_w;
  b.snr_tx_db = snr_tx_db;
  b.calibration = from_db(snr_tx_db) * p_noise_w / p_source_ref_w;
  return b;
}

void validate(const DetectionThreshold& t) {
  if (!(t.ber_target > 0.0 && t.ber_target < 0.5))
    throw Error(ErrCode::invalid_argument, "ber_target must lie in (0, 0.5)");
}

double delta_power(double p_on_w, double p_off_w) {
  if (p_on_w < 0.0 || p_off_w < 0.0)
    throw Error(ErrCode::invalid_argument, "port powers must be non-negative");
  return std::abs(p_on_w - p_off_w);
}

double delta_snr(double delta_p_w, const LinkBudget& b) {
  if (delta_p_w < 0.0) throw Error(ErrCode::invalid_argument, "delta power must be >= 0");
  return b.calibration * delta_p_w / b.p_noise_w;
}

double ber_from_delta_snr(double ds) {
  if (ds < 0.0) throw Error(ErrCode::invalid_argument, "delta SNR must be >= 0");
  return 0.5 * std::erfc(ds);
}

double snr_captured_db(const std::vector<double>& p_off_samples_w, const LinkBudget& b) {
  if (p_off_samples_w.empty())
    throw Error(ErrCode::invalid_argument, "captured SNR needs at least one sample");
  // summed in sorted order so the mean is exactly permutation invariant
  std::vector<double> sorted = p_off_samples_w;
  std::sort(sorted.begin(), sorted.end());
  double acc = 0.0;
  for (double v : sorted) acc += v;
  const double mean = acc / static_cast<double>(sorted.size());
  return to_db(b.calibration * mean / b.p_noise_w);
}

double outage_probability(const std::vector<double>& delta_snr_db, const DetectionThreshold& t) {
  if (delta_snr_db.empty())
    throw Error(ErrCode::invalid_argument, "outage needs at least one sample");
  std::size_t below = 0;
  for (double v : delta_snr_db)
    if (v < t.delta_snr_target_db) ++below;
  return static_cast<double>(below) / static_cast<double>(delta_snr_db.size());
}

}  // namespace ambtag::metrics
