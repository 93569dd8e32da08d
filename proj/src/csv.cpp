// SPDX-FileCopyrightText: Copyright (c) 2026 ambtag contributors
// SPDX-License-Identifier: Apache-2.0

#include "csv.hpp"

#include <cstdio>
#include <fstream>

namespace ambtag::io {

std::string format_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string map_layer_csv(const sweep::ContrastMap& m, int layer) {
  if (layer < 0 || layer >= static_cast<int>(m.layers.size()))
    throw Error(ErrCode::invalid_argument, "layer index out of range");
  const auto& o = m.orientations[layer];
  std::string out = "x_m,y_m,orientation_index,phi_deg,theta_deg,delta_snr_db,masked\n";
  const int nx = m.grid.nx(), ny = m.grid.ny();
  for (int iy = 0; iy < ny; ++iy)
    for (int ix = 0; ix < nx; ++ix) {
      const int c = m.cell(ix, iy);
      const bool masked = m.mask[c] != 0;
      out += format_num(m.grid.x(ix)) + ',' + format_num(m.grid.y(iy)) + ',';
      out += std::to_string(layer) + ',' + format_num(o.phi_deg) + ',' + format_num(o.theta_deg);
      out += ',';
      out += masked ? "nan" : format_num(m.layers[layer][c]);
      out += masked ? ",1\n" : ",0\n";
    }
  return out;
}

std::string best_map_csv(const sweep::BestPolarizationMap& m) {
  std::string out = "x_m,y_m,orientation_index,phi_deg,theta_deg,delta_snr_db,masked\n";
  const int nx = m.grid.nx(), ny = m.grid.ny();
  for (int iy = 0; iy < ny; ++iy)
    for (int ix = 0; ix < nx; ++ix) {
      const int c = iy * nx + ix;
      const bool masked = m.mask[c] != 0;
      const auto& o = m.orientations[m.best_index[c]];
      out += format_num(m.grid.x(ix)) + ',' + format_num(m.grid.y(iy)) + ',';
      out += std::to_string(m.best_index[c]) + ',' + format_num(o.phi_deg) + ',' +
             format_num(o.theta_deg) + ',';
      out += masked ? "nan" : format_num(m.best_delta_snr_db[c]);
      out += masked ? ",1\n" : ",0\n";
    }
  return out;
}

std::string velvet_csv(const sweep::BestPolarizationMap& m) {
  std::string out = "x_m,y_m,phi_deg,theta_deg,ux,uy\n";
  const int nx = m.grid.nx(), ny = m.grid.ny();
  for (int iy = 0; iy < ny; ++iy)
    for (int ix = 0; ix < nx; ++ix) {
      const int c = iy * nx + ix;
      if (m.mask[c]) continue;
      const auto& o = m.orientations[m.best_index[c]];
      const Vec3 u = scene::orientation_to_axis(o);
      out += format_num(m.grid.x(ix)) + ',' + format_num(m.grid.y(iy)) + ',';
      out += format_num(o.phi_deg) + ',' + format_num(o.theta_deg) + ',';
      out += format_num(u.x) + ',' + format_num(u.y) + '\n';
    }
  return out;
}

std::string outage_csv(const sweep::OutageCurve& c) {
  std::string out = "snr_tx_db,outage\n";
  for (std::size_t i = 0; i < c.snr_tx_db.size(); ++i)
    out += format_num(c.snr_tx_db[i]) + ',' + format_num(c.outage[i]) + '\n';
  return out;
}

std::string captured_csv(const sweep::CapturedCurve& c) {
  std::string out = "snr_tx_db,snr_captured_db\n";
  for (std::size_t i = 0; i < c.snr_tx_db.size(); ++i)
    out += format_num(c.snr_tx_db[i]) + ',' + format_num(c.captured_db[i]) + '\n';
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(ErrCode::io, "cannot write file: " + path);
  f << content;
  if (!f.good()) throw Error(ErrCode::io, "short write: " + path);
}

}  // namespace ambtag::io
