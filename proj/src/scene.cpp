// SPDX-FileCopyrightText: Copyright (c) 2026 ambtag contributors
// SPDX-License-Identifier: Apache-2.0

#include "scene.hpp"

#include <algorithm>
#include <cmath>

#include "rng.hpp"

namespace ambtag::scene {

Vec3 orientation_to_axis(const OrientationAngles& o) {
  const double phi = deg2rad(o.phi_deg);
  const double theta = deg2rad(o.theta_deg);
  return {std::sin(phi) * std::cos(theta), std::sin(phi) * std::sin(theta),
          std::cos(phi)};
}

OrientationAngles axis_to_orientation(const Vec3& axis) {
  Vec3 u = axis.normalized();
  // pick the half-sphere representative: y > 0, ties toward +x then +z
  if (u.y < 0.0 || (u.y == 0.0 && (u.x < 0.0 || (u.x == 0.0 && u.z < 0.0)))) {
    u = -u;
  }
  const double phi = std::acos(std::clamp(u.z, -1.0, 1.0));
  double theta = std::atan2(u.y, u.x);
  if (theta < 0.0) theta += kPi;  // guards tiny negatives from rounding
  return {rad2deg(phi), rad2deg(theta)};
}

namespace {

void check_wire(const Vec3& center, double length, double radius, const char* what) {
  if (!center.finite()) throw Error(ErrCode::invalid_argument, std::string(what) + ": non-finite center");
  if (!(length > 0.0)) throw Error(ErrCode::invalid_argument, std::string(what) + ": length must be > 0");
  if (!(radius > 0.0)) throw Error(ErrCode::invalid_argument, std::string(what) + ": wire radius must be > 0");
  if (radius > length / 50.0)
    throw Error(ErrCode::invalid_argument,
                std::string(what) + ": wire radius must be <= length/50 (thin-wire regime)");
}

std::pair<Vec3, Vec3> wire_endpoints(const Vec3& center, const OrientationAngles& o, double length) {
  const Vec3 u = orientation_to_axis(o);
  return {center - u * (length / 2.0), center + u * (length / 2.0)};
}

void check_above_ground(const Vec3& center, const OrientationAngles& o, double length,
                        double ground_z, const char* what) {
  auto [a, b] = wire_endpoints(center, o, length);
  if (a.z <= ground_z || b.z <= ground_z)
    throw Error(ErrCode::geometry, std::string(what) + ": wire must lie strictly above the ground plane");
}

}  // namespace

void validate(const Scene& s) {
  if (!(s.frequency_hz > 0.0) || !std::isfinite(s.frequency_hz))
    throw Error(ErrCode::invalid_argument, "scene: frequency_hz must be positive and finite");

  check_wire(s.source.center, s.source.length, s.source.wire_radius, "source");
  check_wire(s.reader.center, s.reader.length, s.reader.wire_radius, "reader");
  check_wire(s.tag_template.center, s.tag_template.length, s.tag_template.wire_radius, "tag");
  for (const auto& sc : s.scatterers) check_wire(sc.center, sc.length, sc.wire_radius, "scatterer");

  const double half_lambda = s.wavelength() / 2.0;
  const DipoleSpec* dip[3] = {&s.source, &s.reader, &s.tag_template};
  const char* names[3] = {"source", "reader", "tag"};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if ((dip[i]->center - dip[j]->center).norm() <= half_lambda)
        throw Error(ErrCode::geometry, std::string("scene: ") + names[i] + "-" + names[j] +
                                           " center distance must exceed lambda/2");

  if (s.ground.present) {
    for (int i = 0; i < 3; ++i)
      check_above_ground(dip[i]->center, dip[i]->orientation, dip[i]->length, s.ground.height_z, names[i]);
    for (const auto& sc : s.scatterers)
      check_above_ground(sc.center, sc.orientation, sc.length, s.ground.height_z, "scatterer");
  }
}

PolarizationSet polarization_set(PolSetKind kind) {
  PolarizationSet out;
  out.kind = kind;
  switch (kind) {
    case PolSetKind::NR:
      out.label = "nr";
      out.orientations = {{45.0, 90.0}};
      break;
    case PolSetKind::NRWorst:
      out.label = "nr-worst";
      out.orientations = {{90.0, 90.0}};
      break;
    case PolSetKind::FourPR:
      out.label = "4pr";
      out.orientations = {{0.0, 90.0}, {45.0, 90.0}, {90.0, 90.0}, {135.0, 90.0}};
      break;
    case PolSetKind::IPR: {
      out.label = "ipr";
      for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j)
          out.orientations.push_back({i * 22.5, j * 22.5});
      break;
    }
    case PolSetKind::Custom:
      throw Error(ErrCode::invalid_argument, "custom polarization sets come from a file");
  }
  return out;
}

PolarizationSet polarization_set_by_name(const std::string& name) {
  if (name == "nr") return polarization_set(PolSetKind::NR);
  if (name == "nr-worst") return polarization_set(PolSetKind::NRWorst);
  if (name == "4pr") return polarization_set(PolSetKind::FourPR);
  if (name == "ipr") return polarization_set(PolSetKind::IPR);
  throw Error(ErrCode::invalid_argument, "unknown polarization set '" + name +
                                             "' (expected nr|nr-worst|4pr|ipr|custom:<file>)");
}

Preset preset_by_name(const std::string& name) {
  if (name == "table1") return Preset::Table1Scattering;
  if (name == "los-crosspol") return Preset::LosCrossPol;
  if (name == "chamber") return Preset::ExperimentChamber;
  throw Error(ErrCode::invalid_argument,
              "unknown preset '" + name + "' (expected table1|los-crosspol|chamber)");
}

namespace {

DipoleSpec make_halfwave(const Vec3& center, OrientationAngles o, double lambda,
                         DipoleRole role, cplx load) {
  DipoleSpec d;
  d.center = center;
  d.orientation = o;
  d.length = lambda / 2.0;
  d.wire_radius = lambda / 1000.0;
  d.role = role;
  d.load_ohms = load;
  return d;
}

// Reflector strip: `count` parallel half-wave wires at lambda/10 pitch. The
// stack direction is perpendicular to the wire axis so the strip approximates
// a finite conducting panel for the wire-parallel polarization.
void add_panel(Scene& s, const Vec3& center, const Vec3& wire_dir, const Vec3& stack_dir,
               int count, double lambda) {
  const double pitch = lambda / 10.0;
  for (int i = 0; i < count; ++i) {
    ScattererSpec sc;
    sc.center = center + stack_dir * (pitch * (i - (count - 1) / 2.0));
    sc.orientation = axis_to_orientation(wire_dir);
    sc.length = lambda / 2.0;
    sc.wire_radius = lambda / 1000.0;
    s.scatterers.push_back(sc);
  }
}

}  // namespace

Scene preset_scene(Preset p, std::uint64_t seed) {
  Scene s;
  s.frequency_hz = 2.4e9;
  s.rng_seed = seed;
  const double lambda = s.wavelength();

  switch (p) {
    case Preset::Table1Scattering: {
      s.source = make_halfwave({0.0, 0.0, 0.3}, {0.0, 0.0}, lambda, DipoleRole::Source, {0.0, 0.0});
      s.reader = make_halfwave({100.0, 0.0, 0.3}, {90.0, 90.0}, lambda, DipoleRole::Reader, {50.0, 0.0});
      s.tag_template = make_halfwave({100.0 - 3.0 * lambda, 0.0, 0.3}, {45.0, 90.0}, lambda,
                                     DipoleRole::Tag, {0.0, 0.0});
      s.ground = {true, 0.0};
      s.scatterers = generate_scatterers(seed, 20, s);
      break;
    }
    case Preset::LosCrossPol: {
      s.source = make_halfwave({0.0, 0.0, 0.3}, {0.0, 0.0}, lambda, DipoleRole::Source, {0.0, 0.0});
      s.reader = make_halfwave({100.0, 0.0, 0.3}, {90.0, 90.0}, lambda, DipoleRole::Reader, {50.0, 0.0});
      s.tag_template = make_halfwave({50.0, 0.3, 0.3}, {45.0, 90.0}, lambda, DipoleRole::Tag, {0.0, 0.0});
      s.ground = {false, 0.0};
      break;
    }
    case Preset::ExperimentChamber: {
      s.source = make_halfwave({0.0, 0.0, 0.0}, {0.0, 0.0}, lambda, DipoleRole::Source, {0.0, 0.0});
      s.reader = make_halfwave({0.35, 0.0, 0.0}, {90.0, 90.0}, lambda, DipoleRole::Reader, {50.0, 0.0});
      s.tag_template = make_halfwave({0.175, 0.1, 0.0}, {45.0, 90.0}, lambda, DipoleRole::Tag, {0.0, 0.0});
      s.ground = {false, 0.0};

      // Six reflector strips of unequal size ringed around the link at fixed
      // azimuths; wire direction alternates vertical/tangential.
      const Vec3 hub{0.175, 0.0, 0.0};
      const double az_deg[6] = {25.0, 85.0, 145.0, 205.0, 265.0, 325.0};
      const double dist[6] = {0.55, 0.65, 0.75, 0.60, 0.70, 0.50};
      const double height[6] = {0.0, 0.05, -0.05, 0.10, 0.0, -0.10};
      const int wires[6] = {13, 17, 21, 25, 29, 33};
      for (int i = 0; i < 6; ++i) {
        const double az = deg2rad(az_deg[i]);
        const Vec3 radial{std::cos(az), std::sin(az), 0.0};
        const Vec3 tangent{-std::sin(az), std::cos(az), 0.0};
        const Vec3 center = hub + radial * dist[i] + Vec3{0.0, 0.0, height[i]};
        const Vec3 vertical{0.0, 0.0, 1.0};
        if (i % 2 == 0)
          add_panel(s, center, vertical, tangent, wires[i], lambda);
        else
          add_panel(s, center, tangent, vertical, wires[i], lambda);
      }
      break;
    }
  }
  validate(s);
  return s;
}

ScattererConstraints default_constraints(const Scene& s) {
  const double lambda = s.wavelength();
  ScattererConstraints c;
  c.min_dist_to_dipoles = lambda;
  c.max_dist_to_reader = 10.0 * lambda;
  c.min_mutual_dist = lambda / 2.0;
  c.ground_margin = lambda / 100.0;
  return c;
}

std::vector<ScattererSpec> generate_scatterers(std::uint64_t seed, int count, const Scene& s,
                                               double length, double wire_radius,
                                               const ScattererConstraints& c) {
  if (count < 0) throw Error(ErrCode::invalid_argument, "scatterer count must be >= 0");
  std::vector<ScattererSpec> out;
  if (count == 0) return out;

  Rng rng(seed);
  const Vec3 anchor = s.reader.center;
  const double r = c.max_dist_to_reader;
  const Vec3 dipoles[3] = {s.source.center, s.reader.center, s.tag_template.center};

  long attempts = 0;
  while (static_cast<int>(out.size()) < count) {
    if (++attempts > c.max_attempts)
      throw Error(ErrCode::infeasible,
                  "scatterer placement: constraint set infeasible (attempt cap reached)");

    Vec3 pos{rng.uniform(anchor.x - r, anchor.x + r), rng.uniform(anchor.y - r, anchor.y + r),
             rng.uniform(anchor.z - r, anchor.z + r)};

    if (!((pos - anchor).norm() < c.max_dist_to_reader)) continue;
    bool ok = true;
    for (const auto& d : dipoles)
      if (!((pos - d).norm() > c.min_dist_to_dipoles)) { ok = false; break; }
    if (!ok) continue;
    for (const auto& prev : out)
      if ((pos - prev.center).norm() < c.min_mutual_dist) { ok = false; break; }
    if (!ok) continue;

    // uniform axis on the half-sphere: full-sphere direction, canonicalized
    const double zc = 1.0 - 2.0 * rng.uniform();
    const double az = 2.0 * kPi * rng.uniform();
    const double sz = std::sqrt(std::max(0.0, 1.0 - zc * zc));
    const OrientationAngles o = axis_to_orientation({sz * std::cos(az), sz * std::sin(az), zc});

    if (s.ground.present) {
      const Vec3 u = orientation_to_axis(o);
      const double zlo = std::min(pos.z - u.z * length / 2.0, pos.z + u.z * length / 2.0);
      if (zlo <= s.ground.height_z + c.ground_margin) continue;
    }

    out.push_back({pos, o, length, wire_radius});
  }
  return out;
}

std::vector<ScattererSpec> generate_scatterers(std::uint64_t seed, int count, const Scene& s) {
  const double lambda = s.wavelength();
  return generate_scatterers(seed, count, s, lambda / 2.0, lambda / 1000.0,
                             default_constraints(s));
}

}  // namespace ambtag::scene
