// SPDX-FileCopyrightText: Copyright (c) 2026 ambtag contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef AMBTAG_METRICS_HPP
#define AMBTAG_METRICS_HPP

#include <vector>

#include "types.hpp"

namespace ambtag::metrics {

// Detector-side quantities. Everything internal is linear; dB only at the
// reporting edges.

struct LinkBudget {
  double p_noise_w = 1.0;   // receiver noise power (normalized)
  double snr_tx_db = 0.0;   // requested source-power-to-noise ratio
  double calibration = 1.0; // rescales 1 V-feed solver powers to snr_tx_db
};

// The solver always runs with a 1 V source feed; the whole system is linear
// in feed power, so one reference run fixes the scale. `p_source_ref_w` is
// the 1 V feed power of the tag-free environment.
LinkBudget make_budget(double snr_tx_db, double p_noise_w, double p_source_ref_w);

struct DetectionThreshold {
  double delta_snr_target_db = 3.4;
  double ber_target = 1e-2;
};

void validate(const DetectionThreshold& t);

double delta_power(double p_on_w, double p_off_w);                 // |on - off|
double delta_snr(double delta_p_w, const LinkBudget& b);           // linear
double ber_from_delta_snr(double delta_snr_linear);                // 0.5 erfc(ds)
double snr_captured_db(const std::vector<double>& p_off_samples_w, const LinkBudget& b);
double outage_probability(const std::vector<double>& delta_snr_db,
                          const DetectionThreshold& t);

inline double to_db(double linear) { return 10.0 * std::log10(linear); }
inline double from_db(double db) { return std::pow(10.0, db / 10.0); }

}  // namespace ambtag::metrics

#endif
