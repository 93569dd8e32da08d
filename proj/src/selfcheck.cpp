// SPDX-FileCopyrightText: Copyright (c) 2026 ambtag contributors
// SPDX-License-Identifier: Apache-2.0

#include "selfcheck.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "metrics.hpp"
#include "scene.hpp"

namespace ambtag {

namespace {

double max_relative_asymmetry(const Eigen::MatrixXcd& z) {
  double worst = 0.0;
  for (int i = 0; i < z.rows(); ++i)
    for (int j = i + 1; j < z.cols(); ++j) {
      const double denom = std::abs(z(i, j));
      if (denom == 0.0) continue;
      worst = std::max(worst, std::abs(z(i, j) - z(j, i)) / denom);
    }
  return worst;
}

}  // namespace

SelfcheckResult selfcheck(const mom::SolverParams& params, const std::string& scene_path) {
  std::ostringstream rep;
  bool passed = true;
  auto check = [&](const char* name, bool ok, const std::string& detail) {
    rep << (ok ? "[ok]   " : "[FAIL] ") << name << ": " << detail << "\n";
    passed = passed && ok;
  };
  char buf[160];

  rep << "config: segments_per_halfwave=" << params.segments_per_halfwave
      << " open_circuit_ohms=" << params.open_circuit_ohms
      << " condition_limit=" << params.condition_limit << "\n";

  try {
    // presets construct and validate
    scene::Scene table1 = scene::preset_scene(scene::Preset::Table1Scattering, 7);
    scene::Scene los = scene::preset_scene(scene::Preset::LosCrossPol);
    scene::preset_scene(scene::Preset::ExperimentChamber);
    check("presets", table1.scatterers.size() == 20 && los.scatterers.empty(),
          "three presets constructed");

    // seeded placement reproducibility
    const auto a = scene::generate_scatterers(7, 20, table1);
    const auto b = scene::generate_scatterers(7, 20, table1);
    bool same = a.size() == b.size();
    for (std::size_t i = 0; same && i < a.size(); ++i)
      same = a[i].center.x == b[i].center.x && a[i].center.y == b[i].center.y &&
             a[i].center.z == b[i].center.z &&
             a[i].orientation.phi_deg == b[i].orientation.phi_deg &&
             a[i].orientation.theta_deg == b[i].orientation.theta_deg;
    check("seeded placement", same, "same seed reproduces scatterers bitwise");

    // small scattering scene shared by the matrix checks
    scene::Scene small = los;
    small.reader.center = {2.0, 0.0, 0.3};
    small.tag_template.center = {1.0, 0.2, 0.3};
    small.ground = {true, 0.0};
    small.scatterers = scene::generate_scatterers(3, 3, small);
    const mom::MeshedScene mesh = mom::mesh_scene(small, 7);
    mom::SolveContext ctx(mesh, small.frequency_hz, params.condition_limit);

    const double asym = max_relative_asymmetry(ctx.matrix());
    std::snprintf(buf, sizeof buf, "max relative asymmetry %.2e", asym);
    check("impedance symmetry", asym < 1e-10, buf);

    ctx.apply_loads(mesh.load_table);
    ctx.apply_loads({{mesh.tag_port, cplx{params.open_circuit_ohms, 0.0}}});
    const Eigen::VectorXcd isrc = ctx.excite_and_solve(mesh.source_port);
    const Eigen::VectorXcd irdr = ctx.excite_and_solve(mesh.reader_port);
    const double recip = std::abs(isrc(mesh.reader_port) - irdr(mesh.source_port)) /
                         std::abs(isrc(mesh.reader_port));
    std::snprintf(buf, sizeof buf, "transfer current mismatch %.2e", recip);
    check("reciprocity", recip < 1e-8, buf);

    bool fallback = false;
    const cplx dz{-params.open_circuit_ohms, 0.0};  // off -> on
    const Eigen::VectorXcd fast = ctx.switch_tag_state(mesh.tag_port, dz, isrc, &fallback);
    mom::SolveContext ctx2(mesh, small.frequency_hz, params.condition_limit);
    ctx2.apply_loads(mesh.load_table);
    const Eigen::VectorXcd full = ctx2.excite_and_solve(mesh.source_port);
    const double upd = (fast - full).norm() / full.norm();
    std::snprintf(buf, sizeof buf, "relative error vs full solve %.2e%s", upd,
                  fallback ? " (fallback)" : "");
    check("rank-one update", upd < 1e-8, buf);

    // ground plane handling vs an explicit mirrored copy
    std::vector<mom::WireSegment> doubled;
    const int n_real = mesh.n_real;
    for (int i = 0; i < n_real; ++i) doubled.push_back(mesh.segments[i]);
    for (int i = 0; i < n_real; ++i) {
      mom::WireSegment img = mesh.segments[n_real + i];
      img.wire += 100;  // explicit wires, no longer images
      img.image = false;
      doubled.push_back(img);
    }
    Eigen::MatrixXcd z2 = mom::fill_impedance(doubled, 2 * n_real, 2.0 * kPi * small.frequency_hz);
    for (const auto& [idx, load] : mesh.load_table) {
      z2(idx, idx) += load;
      z2(n_real + idx, n_real + idx) += load;
    }
    z2(mesh.tag_port, mesh.tag_port) += cplx{params.open_circuit_ohms, 0.0};
    z2(n_real + mesh.tag_port, n_real + mesh.tag_port) += cplx{params.open_circuit_ohms, 0.0};
    Eigen::VectorXcd v2 = Eigen::VectorXcd::Zero(2 * n_real);
    v2(mesh.source_port) = 1.0;
    v2(n_real + mesh.source_port) = 1.0;
    const Eigen::VectorXcd i2 = Eigen::PartialPivLU<Eigen::MatrixXcd>(z2).solve(v2);
    const double p_folded =
        0.5 * std::norm(isrc(mesh.reader_port)) * small.reader.load_ohms.real();
    const double p_mirror = 0.5 * std::norm(i2(mesh.reader_port)) * small.reader.load_ohms.real();
    const double img_err = std::abs(p_folded - p_mirror) / p_mirror;
    std::snprintf(buf, sizeof buf, "reader power mismatch %.2e", img_err);
    check("image equivalence", img_err < 1e-6, buf);

    // segmentation refinement drift on the line-of-sight preset
    const mom::TagRun coarse =
        mom::tag_transfer(los, los.tag_template.center, los.tag_template.orientation,
                          {11, params.open_circuit_ohms, params.condition_limit});
    const mom::TagRun fine =
        mom::tag_transfer(los, los.tag_template.center, los.tag_template.orientation,
                          {21, params.open_circuit_ohms, params.condition_limit});
    const double drift = std::abs(coarse.p_on - fine.p_on) / fine.p_on;
    std::snprintf(buf, sizeof buf, "reader power drift %.2f%% (11 -> 21 segments)", 100.0 * drift);
    check("mesh refinement", drift < 0.05, buf);

    // metric identities
    const double ber0 = metrics::ber_from_delta_snr(0.0);
    const double ber_anchor = metrics::ber_from_delta_snr(1.645);
    check("metric identities",
          ber0 == 0.5 && std::abs(ber_anchor - 1e-2) < 5e-4,
          "ber(0) = 0.5, ber(1.645) ~ 1e-2");

    // scene file round trip
    const scene::Scene rt = scene::scene_from_json(scene::scene_to_json(small));
    check("scene round trip", rt.scatterers.size() == small.scatterers.size() &&
                                  rt.frequency_hz == small.frequency_hz,
          "JSON save/load preserves the scene");

    if (!scene_path.empty()) {
      scene::Scene loaded = scene::load_scene(scene_path);
      check("scene file", true, scene_path + " parsed and validated");
      (void)loaded;
    }
  } catch (const Error& e) {
    check("run", false, e.what());
  }

  rep << (passed ? "selfcheck: PASS\n" : "selfcheck: FAIL\n");
  return {rep.str(), passed};
}

}  // namespace ambtag
