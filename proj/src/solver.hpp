// SPDX-FileCopyrightText: Copyright (c) 2026 ambtag contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef AMBTAG_SOLVER_HPP
#define AMBTAG_SOLVER_HPP

#include <Eigen/Dense>
#include <map>
#include <optional>
#include <string>

#include "mesh.hpp"
#include "scene.hpp"
#include "types.hpp"

namespace ambtag::mom {

struct SolverParams {
  int segments_per_halfwave = 11;
  double open_circuit_ohms = 1e6;   // finite stand-in for the open (transparent) state
  double condition_limit = 1e12;
};

struct PortReading {
  cplx current;   // amperes through the port segment
  cplx voltage;   // volts across the port load
  double power_w; // time-average power in the load
};

PortReading port_reading(const Eigen::VectorXcd& currents, int port, cplx load_ohms);

// Dense impedance system for a meshed scene. With a ground plane the image
// contributions are folded into the real-segment equations, so the system
// size is always the number of real segments.
class SolveContext {
 public:
  SolveContext(const MeshedScene& mesh, double frequency_hz, double condition_limit = 1e12);

  // Z'_kk = Z_kk + Z_load; rejects indices outside the real range.
  void apply_loads(const std::map<int, cplx>& loads);

  Eigen::VectorXcd solve(const Eigen::VectorXcd& v_excitation);
  Eigen::VectorXcd excite_and_solve(int source_port, cplx v_source = {1.0, 0.0});

  // Rank-one (Sherman-Morrison) re-solve for a tag-load change of delta_z on
  // the diagonal. base_currents must solve the current matrix. Falls back to
  // a full factorization when the update denominator collapses.
  Eigen::VectorXcd switch_tag_state(int tag_port, cplx delta_z,
                                    const Eigen::VectorXcd& base_currents,
                                    bool* used_fallback = nullptr);

  const Eigen::MatrixXcd& matrix() const { return z_; }
  int size() const { return static_cast<int>(z_.rows()); }
  double condition_estimate();  // from the LU rcond estimate
  const MeshedScene& mesh() const { return mesh_; }

  // binary dump: "AMBZ", version, N, N^2 matrix entries row-major, N currents
  void dump(const std::string& path, const Eigen::VectorXcd& currents);

 private:
  void ensure_factorized();

  MeshedScene mesh_;
  Eigen::MatrixXcd z_;
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu_;
  bool factorized_ = false;
  double condition_limit_;
};

// Builds the folded impedance matrix for an arbitrary segment list (the mesh
// fill and the sweep engine share this path so both produce identical
// entries). `segs` must hold real segments first; when `n_real` < segs.size()
// the trailing entries are images folded onto the first n_real equations.
Eigen::MatrixXcd fill_impedance(const std::vector<WireSegment>& segs, int n_real, double omega);

struct TagRun {
  double p_on = 0.0;
  double p_off = 0.0;
  cplx i_reader_on{0.0, 0.0};
  cplx i_reader_off{0.0, 0.0};
};

// Environment factorization shared across tag positions: the source, reader
// and scatterer block is filled and factorized once; each tag pose adds a
// small trailing block handled through its Schur complement. Immutable after
// construction; run() is const and safe to call from several workers.
class EnvSolver {
 public:
  EnvSolver(const scene::Scene& s, const SolverParams& params);

  TagRun run(const Vec3& tag_center, const scene::OrientationAngles& o) const;

  // lambda/2 center-distance rule against source, reader and scatterers
  bool pose_allowed(const Vec3& tag_center) const;

  double source_power_ref() const { return p_src_ref_; }  // 1 V feed, no tag
  double reader_power_no_tag() const { return p_reader_no_tag_; }
  const scene::Scene& scene() const { return scene_; }
  const SolverParams& params() const { return params_; }
  double wavelength() const { return scene_.wavelength(); }

 private:
  scene::Scene scene_;
  SolverParams params_;
  std::vector<WireSegment> env_segs_;  // real then images
  int n_env_ = 0;
  int source_port_ = -1, reader_port_ = -1;
  int tag_wire_id_ = 0;
  double omega_ = 0.0;
  cplx reader_load_{0.0, 0.0};
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu_;
  Eigen::VectorXcd y0_;  // env currents for the 1 V source feed
  Eigen::VectorXcd zr_;  // Z_env^-1 e_reader (Z symmetric)
  double p_src_ref_ = 0.0;
  double p_reader_no_tag_ = 0.0;
};

// One-shot convenience: P_on / P_off at the reader for a tag pose.
TagRun tag_transfer(const scene::Scene& s, const Vec3& tag_center,
                    const scene::OrientationAngles& o, const SolverParams& params = {});

}  // namespace ambtag::mom

#endif
