// SPDX-FileCopyrightText: Copyright (c) 2026 ambtag contributors
// SPDX-License-Identifier: Apache-2.0

#include "solver.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>

#include "kernel.hpp"

namespace ambtag::mom {

PortReading port_reading(const Eigen::VectorXcd& currents, int port, cplx load_ohms) {
  PortReading r;
  r.current = currents(port);
  r.voltage = load_ohms * r.current;
  r.power_w = 0.5 * std::norm(r.current) * load_ohms.real();
  return r;
}

namespace {

void check_no_overlap(const std::vector<WireSegment>& segs, int n_real) {
  const int n_total = static_cast<int>(segs.size());
  for (int i = 0; i < n_real; ++i) {
    for (int j = i + 1; j < n_total; ++j) {
      const WireSegment& a = segs[i];
      const WireSegment& b = segs[j];
      if (a.wire == b.wire && a.image == b.image) continue;  // same straight wire
      const double rsum = a.radius + b.radius;
      const double reach = 0.5 * (a.length() + b.length()) + rsum;
      if ((a.center() - b.center()).norm() > reach) continue;
      if (segment_distance(a, b) < rsum)
        throw Error(ErrCode::geometry, "overlapping wire segments (distance below radius sum)");
    }
  }
}

}  // namespace

Eigen::MatrixXcd fill_impedance(const std::vector<WireSegment>& segs, int n_real, double omega) {
  check_no_overlap(segs, n_real);
  const bool folded = static_cast<int>(segs.size()) > n_real;
  Eigen::MatrixXcd z(n_real, n_real);
  for (int i = 0; i < n_real; ++i) {
    for (int j = 0; j < n_real; ++j) {
      cplx v = mutual_impedance(segs[i], segs[j], omega);
      if (folded) v += mutual_impedance(segs[i], segs[n_real + j], omega);
      z(i, j) = v;
    }
  }
  return z;
}

SolveContext::SolveContext(const MeshedScene& mesh, double frequency_hz, double condition_limit)
    : mesh_(mesh), condition_limit_(condition_limit) {
  const double omega = 2.0 * kPi * frequency_hz;
  z_ = fill_impedance(mesh_.segments, mesh_.n_real, omega);
  // loads (mesh_.load_table, tag state) are applied explicitly by the caller
}

void SolveContext::apply_loads(const std::map<int, cplx>& loads) {
  for (const auto& [idx, z] : loads) {
    if (idx < 0 || idx >= size()) {
      if (idx >= size() && idx < static_cast<int>(mesh_.segments.size()))
        throw Error(ErrCode::invalid_argument, "cannot place a load on an image segment");
      throw Error(ErrCode::invalid_argument, "load segment index out of range");
    }
    z_(idx, idx) += z;
  }
  factorized_ = false;
}

void SolveContext::ensure_factorized() {
  if (factorized_) return;
  lu_.compute(z_);
  const double rcond = lu_.rcond();
  if (!(rcond > 0.0) || 1.0 / rcond > condition_limit_) {
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "impedance system ill-conditioned: cond estimate %.3e exceeds %.3e",
                  rcond > 0.0 ? 1.0 / rcond : INFINITY, condition_limit_);
    throw Error(ErrCode::numeric, buf);
  }
  factorized_ = true;
}

double SolveContext::condition_estimate() {
  ensure_factorized();
  return 1.0 / lu_.rcond();
}

Eigen::VectorXcd SolveContext::solve(const Eigen::VectorXcd& v) {
  if (v.size() != size())
    throw Error(ErrCode::invalid_argument, "excitation vector size mismatch");
  ensure_factorized();
  return lu_.solve(v);
}

Eigen::VectorXcd SolveContext::excite_and_solve(int source_port, cplx v_source) {
  if (source_port < 0 || source_port >= size())
    throw Error(ErrCode::invalid_argument, "source port index out of range");
  if (v_source == cplx{0.0, 0.0}) return Eigen::VectorXcd::Zero(size());
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(size());
  v(source_port) = v_source;
  return solve(v);
}

Eigen::VectorXcd SolveContext::switch_tag_state(int tag_port, cplx delta_z,
                                                const Eigen::VectorXcd& base,
                                                bool* used_fallback) {
  if (tag_port < 0 || tag_port >= size())
    throw Error(ErrCode::invalid_argument, "tag port index out of range");
  if (used_fallback) *used_fallback = false;
  if (delta_z == cplx{0.0, 0.0}) return base;
  ensure_factorized();

  Eigen::VectorXcd w = lu_.solve(Eigen::VectorXcd::Unit(size(), tag_port));
  const cplx denom = 1.0 + delta_z * w(tag_port);
  if (std::abs(denom) < 1e-14) {
    if (used_fallback) *used_fallback = true;
    Eigen::MatrixXcd z2 = z_;
    z2(tag_port, tag_port) += delta_z;
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu2(z2);
    return lu2.solve(z_ * base);  // same excitation as base: V = Z * base
  }
  return base - w * (delta_z * base(tag_port) / denom);
}

void SolveContext::dump(const std::string& path, const Eigen::VectorXcd& currents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrCode::io, "cannot write dump file: " + path);
  const std::uint32_t version = 1;
  const std::uint32_t n = static_cast<std::uint32_t>(size());
  out.write("AMBZ", 4);
  out.write(reinterpret_cast<const char*>(&version), 4);
  out.write(reinterpret_cast<const char*>(&n), 4);
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) {
      const double re = z_(i, j).real(), im = z_(i, j).imag();
      out.write(reinterpret_cast<const char*>(&re), 8);
      out.write(reinterpret_cast<const char*>(&im), 8);
    }
  Eigen::VectorXcd c = currents;
  if (c.size() == 0) c = Eigen::VectorXcd::Zero(size());
  if (c.size() != size()) throw Error(ErrCode::invalid_argument, "dump: current vector size mismatch");
  for (int i = 0; i < size(); ++i) {
    const double re = c(i).real(), im = c(i).imag();
    out.write(reinterpret_cast<const char*>(&re), 8);
    out.write(reinterpret_cast<const char*>(&im), 8);
  }
  if (!out.good()) throw Error(ErrCode::io, "short write on dump file: " + path);
}

// ------------------------------------------------------------ EnvSolver ---

EnvSolver::EnvSolver(const scene::Scene& s, const SolverParams& params)
    : scene_(s), params_(params) {
  scene::validate(s);
  const int spw = params.segments_per_halfwave;
  if (spw < 5 || spw % 2 == 0)
    throw Error(ErrCode::invalid_argument, "segments_per_halfwave must be odd and >= 5");

  // Environment mesh = full mesh minus the tag wire; indices match the full
  // mesh layout (tag block trailing), so both paths fill identical entries.
  MeshedScene full = mesh_scene(s, spw);
  for (int i = 0; i < full.tag_first; ++i) env_segs_.push_back(full.segments[i]);
  n_env_ = full.tag_first;
  if (full.ground)
    for (int i = 0; i < n_env_; ++i) {
      WireSegment img = mirror_segment(full.segments[i], full.ground_z);
      img.index = full.n_real + i;  // same numbering as the full mesh
      env_segs_.push_back(img);
    }
  source_port_ = full.source_port;
  reader_port_ = full.reader_port;
  tag_wire_id_ = full.segments[full.tag_first].wire;
  reader_load_ = s.reader.load_ohms;
  omega_ = 2.0 * kPi * s.frequency_hz;

  Eigen::MatrixXcd z = fill_impedance(env_segs_, n_env_, omega_);
  z(reader_port_, reader_port_) += reader_load_;
  lu_.compute(z);
  const double rcond = lu_.rcond();
  if (!(rcond > 0.0) || 1.0 / rcond > params.condition_limit)
    throw Error(ErrCode::numeric, "environment impedance system ill-conditioned");

  y0_ = lu_.solve(Eigen::VectorXcd::Unit(n_env_, source_port_));
  zr_ = lu_.solve(Eigen::VectorXcd::Unit(n_env_, reader_port_));
  p_src_ref_ = 0.5 * y0_(source_port_).real();
  p_reader_no_tag_ = 0.5 * std::norm(y0_(reader_port_)) * reader_load_.real();
}

bool EnvSolver::pose_allowed(const Vec3& tag_center) const {
  const double half_lambda = wavelength() / 2.0;
  if ((tag_center - scene_.source.center).norm() <= half_lambda) return false;
  if ((tag_center - scene_.reader.center).norm() <= half_lambda) return false;
  for (const auto& sc : scene_.scatterers)
    if ((tag_center - sc.center).norm() <= half_lambda) return false;
  return true;
}

TagRun EnvSolver::run(const Vec3& tag_center, const scene::OrientationAngles& o) const {
  const double half_lambda = wavelength() / 2.0;
  if ((tag_center - scene_.source.center).norm() <= half_lambda ||
      (tag_center - scene_.reader.center).norm() <= half_lambda)
    throw Error(ErrCode::geometry, "tag pose violates the lambda/2 dipole-separation rule");

  const int t = params_.segments_per_halfwave;
  const scene::DipoleSpec& tpl = scene_.tag_template;
  std::vector<WireSegment> tag =
      mesh_wire(tag_center, o, tpl.length, tpl.wire_radius, t, tag_wire_id_, n_env_);
  std::vector<WireSegment> tag_img;
  if (scene_.ground.present) {
    if (tag_center.z - tpl.length / 2.0 <= scene_.ground.height_z)
      throw Error(ErrCode::geometry, "tag wire intersects the ground plane");
    for (const auto& sgm : tag) {
      WireSegment img = mirror_segment(sgm, scene_.ground.height_z);
      img.index = n_env_ + t + sgm.index;  // full-mesh image numbering
      tag_img.push_back(img);
    }
  }

  // cross-couplings and the tag self block, image-folded like the main fill
  Eigen::MatrixXcd B(n_env_, t);
  for (int e = 0; e < n_env_; ++e)
    for (int j = 0; j < t; ++j) {
      cplx v = mutual_impedance(env_segs_[e], tag[j], omega_);
      if (!tag_img.empty()) v += mutual_impedance(env_segs_[e], tag_img[j], omega_);
      B(e, j) = v;
    }
  Eigen::MatrixXcd ztt(t, t);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) {
      cplx v = mutual_impedance(tag[i], tag[j], omega_);
      if (!tag_img.empty()) v += mutual_impedance(tag[i], tag_img[j], omega_);
      ztt(i, j) = v;
    }

  for (int e = 0; e < n_env_; ++e)
    for (int j = 0; j < t; ++j) {
      const double rsum = env_segs_[e].radius + tag[j].radius;
      const double reach = 0.5 * (env_segs_[e].length() + tag[j].length()) + rsum;
      if ((env_segs_[e].center() - tag[j].center()).norm() > reach) continue;
      if (segment_distance(env_segs_[e], tag[j]) < rsum)
        throw Error(ErrCode::geometry, "tag wire overlaps an environment wire");
    }

  const Eigen::MatrixXcd u = lu_.solve(B);               // Z_env^-1 B
  const Eigen::MatrixXcd s_base = ztt - B.transpose() * u;
  const Eigen::VectorXcd rhs = B.transpose() * y0_;
  const Eigen::RowVectorXcd reader_row = zr_.transpose() * B;  // row r of Z^-1 B

  const int tag_port_local = t / 2;
  auto reader_current = [&](cplx load) {
    Eigen::MatrixXcd s = s_base;
    s(tag_port_local, tag_port_local) += load;
    const Eigen::VectorXcd i_tag = Eigen::PartialPivLU<Eigen::MatrixXcd>(s).solve(-rhs);
    return y0_(reader_port_) - (reader_row * i_tag)(0);
  };

  TagRun out;
  out.i_reader_on = reader_current(cplx{0.0, 0.0});
  out.i_reader_off = reader_current(cplx{params_.open_circuit_ohms, 0.0});
  out.p_on = 0.5 * std::norm(out.i_reader_on) * reader_load_.real();
  out.p_off = 0.5 * std::norm(out.i_reader_off) * reader_load_.real();
  return out;
}

TagRun tag_transfer(const scene::Scene& s, const Vec3& tag_center,
                    const scene::OrientationAngles& o, const SolverParams& params) {
  return EnvSolver(s, params).run(tag_center, o);
}

}  // namespace ambtag::mom
