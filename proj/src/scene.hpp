// SPDX-FileCopyrightText: Copyright (c) 2026 ambtag contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef AMBTAG_SCENE_HPP
#define AMBTAG_SCENE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "types.hpp"

namespace ambtag::scene {

/// Dipole-axis orientation. phi is the polar tilt from +z, theta the azimuth
/// from +x, both in degrees. A dipole axis and its negation are the same
/// antenna; the canonical representative keeps the axis in the y >= 0
/// half-sphere, i.e. phi in [0, 180), theta in [0, 180).
struct OrientationAngles {
  double phi_deg = 0.0;
  double theta_deg = 0.0;

  bool operator==(const OrientationAngles& o) const {
    return phi_deg == o.phi_deg && theta_deg == o.theta_deg;
  }
};

// unit axis (sin phi cos theta, sin phi sin theta, cos phi)
Vec3 orientation_to_axis(const OrientationAngles& o);

// canonical angles for an arbitrary axis (half-sphere representative)
OrientationAngles axis_to_orientation(const Vec3& axis);

enum class DipoleRole { Source, Tag, Reader };

struct DipoleSpec {
  Vec3 center;
  OrientationAngles orientation;
  double length = 0.0;       // meters
  double wire_radius = 0.0;  // meters
  DipoleRole role = DipoleRole::Source;
  cplx load_ohms{0.0, 0.0};  // reader: port load; tag: state dependent; source: unused
};

struct ScattererSpec {
  Vec3 center;
  OrientationAngles orientation;
  double length = 0.0;
  double wire_radius = 0.0;
};

struct GroundPlaneSpec {
  bool present = false;
  double height_z = 0.0;  // perfect electric conductor at z = height_z
};

enum class TagState { On, Off };  // On = short circuit (backscatter), Off = open

struct Scene {
  double frequency_hz = 0.0;
  DipoleSpec source;
  DipoleSpec reader;
  DipoleSpec tag_template;
  std::vector<ScattererSpec> scatterers;
  GroundPlaneSpec ground;
  std::uint64_t rng_seed = 1;

  double wavelength() const { return kSpeedOfLight / frequency_hz; }
};

// Throws Error(geometry/invalid_argument) when an invariant is broken:
// positive frequency, finite coordinates, radius <= length/50, pairwise
// dipole center distances > lambda/2, wires strictly above a present ground.
void validate(const Scene& s);

enum class PolSetKind { NR, NRWorst, FourPR, IPR, Custom };

struct PolarizationSet {
  PolSetKind kind = PolSetKind::Custom;
  std::string label;
  std::vector<OrientationAngles> orientations;
};

// nr         -> {(45,90)}          fixed tag, best average orientation
// nr-worst   -> {(90,90)}
// 4pr        -> {(0,90),(45,90),(90,90),(135,90)}
// ipr        -> 9x9 grid, phi/theta in {0,22.5,...,180}, 81 entries
PolarizationSet polarization_set(PolSetKind kind);
PolarizationSet polarization_set_by_name(const std::string& name);  // cli spellings above

enum class Preset { Table1Scattering, LosCrossPol, ExperimentChamber };

Preset preset_by_name(const std::string& name);  // table1 | los-crosspol | chamber

// Ready-made scenes; `seed` drives the scatterer draw of Table1Scattering.
Scene preset_scene(Preset p, std::uint64_t seed = 1);

struct ScattererConstraints {
  double min_dist_to_dipoles;   // > lambda by default
  double max_dist_to_reader;    // < 10 lambda by default
  double min_mutual_dist;       // scatterer-scatterer spacing, lambda/2
  double ground_margin;         // endpoint clearance above a present ground
  long max_attempts = 100000;
};

ScattererConstraints default_constraints(const Scene& s);

// Rejection-sampling placement of `count` scatterers of length `length`.
// Orientations are uniform over the axis half-sphere. Same seed, same inputs
// -> bitwise identical output. Throws Error(infeasible) past the attempt cap.
std::vector<ScattererSpec> generate_scatterers(std::uint64_t seed, int count,
                                               const Scene& s, double length,
                                               double wire_radius,
                                               const ScattererConstraints& c);
std::vector<ScattererSpec> generate_scatterers(std::uint64_t seed, int count,
                                               const Scene& s);

// ----------------------------------------------------------------- JSON ---
// Scene files are JSON with mandatory `schema_version: 1`; lengths in
// meters, angles in degrees. See README for the full key list.
Scene scene_from_json(const std::string& text);
std::string scene_to_json(const Scene& s);
Scene load_scene(const std::string& path);
void save_scene(const Scene& s, const std::string& path);

PolarizationSet polset_from_json(const std::string& text);
PolarizationSet load_polset(const std::string& path);

}  // namespace ambtag::scene

#endif
