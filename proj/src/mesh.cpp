// SPDX-FileCopyrightText: Copyright (c) 2026 ambtag contributors
// SPDX-License-Identifier: Apache-2.0

#include "mesh.hpp"

#include <algorithm>
#include <cmath>

namespace ambtag::mom {

WireSegment mirror_segment(const WireSegment& s, double ground_z) {
  WireSegment m = s;
  m.start = {s.end.x, s.end.y, 2.0 * ground_z - s.end.z};
  m.end = {s.start.x, s.start.y, 2.0 * ground_z - s.start.z};
  m.image = true;
  return m;
}

double segment_distance(const WireSegment& A, const WireSegment& B) {
  // closest points of two 3D segments (clamped line-line distance)
  const Vec3 d1 = A.end - A.start;
  const Vec3 d2 = B.end - B.start;
  const Vec3 r = A.start - B.start;
  const double a = d1.dot(d1), e = d2.dot(d2), f = d2.dot(r);
  double s = 0.0, t = 0.0;
  const double c = d1.dot(r);
  const double b = d1.dot(d2);
  const double denom = a * e - b * b;
  if (denom > 1e-30) s = std::clamp((b * f - c * e) / denom, 0.0, 1.0);
  t = (b * s + f) / e;
  if (t < 0.0) {
    t = 0.0;
    s = std::clamp(-c / a, 0.0, 1.0);
  } else if (t > 1.0) {
    t = 1.0;
    s = std::clamp((b - c) / a, 0.0, 1.0);
  }
  return ((A.start + d1 * s) - (B.start + d2 * t)).norm();
}

std::vector<WireSegment> mesh_wire(const Vec3& center, const scene::OrientationAngles& o,
                                   double length, double radius, int count, int wire_id,
                                   int index0) {
  const Vec3 u = scene::orientation_to_axis(o);
  const Vec3 a = center - u * (length / 2.0);
  std::vector<WireSegment> segs(count);
  for (int i = 0; i < count; ++i) {
    segs[i].start = a + u * (length * i / count);
    segs[i].end = a + u * (length * (i + 1) / count);
    segs[i].radius = radius;
    segs[i].wire = wire_id;
    segs[i].index = index0 + i;
  }
  return segs;
}

namespace {

int scatterer_segment_count(double length, double lambda, int spw) {
  const int halves = std::max(1, static_cast<int>(std::lround(length / (lambda / 2.0))));
  const int by_density = spw * halves;
  const int by_cap = static_cast<int>(std::ceil(length / (lambda / 10.0)));
  return std::max(by_density, by_cap);
}

}  // namespace

MeshedScene mesh_scene(const scene::Scene& s, int segments_per_halfwave) {
  if (segments_per_halfwave < 5 || segments_per_halfwave % 2 == 0)
    throw Error(ErrCode::invalid_argument,
                "segments_per_halfwave must be odd and >= 5 (a center feed/load segment is needed)");
  scene::validate(s);

  const double lambda = s.wavelength();
  MeshedScene m;
  m.frequency_hz = s.frequency_hz;
  m.ground = s.ground.present;
  m.ground_z = s.ground.height_z;
  m.segments_per_halfwave = segments_per_halfwave;

  const int spw = segments_per_halfwave;
  auto add_dipole = [&](const scene::DipoleSpec& d, int wire_id) -> int {
    if (d.length / spw > lambda / 10.0)
      throw Error(ErrCode::geometry, "dipole segmentation coarser than lambda/10");
    auto segs = mesh_wire(d.center, d.orientation, d.length, d.wire_radius, spw, wire_id,
                          static_cast<int>(m.segments.size()));
    const int port = static_cast<int>(m.segments.size()) + spw / 2;
    m.segments.insert(m.segments.end(), segs.begin(), segs.end());
    return port;
  };

  int wire_id = 0;
  m.source_port = add_dipole(s.source, wire_id++);
  m.reader_port = add_dipole(s.reader, wire_id++);
  for (const auto& sc : s.scatterers) {
    const int n = scatterer_segment_count(sc.length, lambda, spw);
    auto segs = mesh_wire(sc.center, sc.orientation, sc.length, sc.wire_radius, n, wire_id++,
                          static_cast<int>(m.segments.size()));
    m.segments.insert(m.segments.end(), segs.begin(), segs.end());
  }
  m.tag_first = static_cast<int>(m.segments.size());
  m.tag_count = spw;
  m.tag_port = add_dipole(s.tag_template, wire_id++);

  m.n_real = static_cast<int>(m.segments.size());
  m.load_table[m.reader_port] = s.reader.load_ohms;

  if (m.ground) {
    for (int i = 0; i < m.n_real; ++i) {
      if (std::min(m.segments[i].start.z, m.segments[i].end.z) <= m.ground_z)
        throw Error(ErrCode::geometry, "wire intersects the ground plane");
      WireSegment img = mirror_segment(m.segments[i], m.ground_z);
      img.index = m.n_real + i;
      m.segments.push_back(img);
    }
  }
  return m;
}

}  // namespace ambtag::mom
