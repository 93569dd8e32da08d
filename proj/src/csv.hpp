// SPDX-FileCopyrightText: Copyright (c) 2026 ambtag contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef AMBTAG_CSV_HPP
#define AMBTAG_CSV_HPP

#include <string>

#include "sweep.hpp"

namespace ambtag::io {

std::string format_num(double v);  // "%.12g", shared by every CSV writer

// header: x_m,y_m,orientation_index,phi_deg,theta_deg,delta_snr_db,masked
std::string map_layer_csv(const sweep::ContrastMap& m, int layer);
std::string best_map_csv(const sweep::BestPolarizationMap& m);

// header: x_m,y_m,phi_deg,theta_deg,ux,uy  (in-plane components of the best axis)
std::string velvet_csv(const sweep::BestPolarizationMap& m);

std::string outage_csv(const sweep::OutageCurve& c);       // snr_tx_db,outage
std::string captured_csv(const sweep::CapturedCurve& c);   // snr_tx_db,snr_captured_db

void write_file(const std::string& path, const std::string& content);

}  // namespace ambtag::io

#endif
