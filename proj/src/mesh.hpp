// SPDX-FileCopyrightText: Copyright (c) 2026 ambtag contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef AMBTAG_MESH_HPP
#define AMBTAG_MESH_HPP

#include <map>
#include <vector>

#include "scene.hpp"
#include "types.hpp"

namespace ambtag::mom {

struct WireSegment {
  Vec3 start, end;  // pulse current flows start -> end
  double radius = 0.0;
  int wire = -1;   // owning wire id
  int index = -1;  // global mesh index
  bool image = false;

  Vec3 center() const { return (start + end) * 0.5; }
  double length() const { return (end - start).norm(); }
  Vec3 tangent() const { return (end - start).normalized(); }
};

// Mirror across a PEC plane z = ground_z. Swapping the endpoints encodes the
// image-current sign rule (horizontal components flip, vertical kept), so an
// image segment reuses the real segment's current coefficient as-is.
WireSegment mirror_segment(const WireSegment& s, double ground_z);

// closest distance between two segments (axis to axis)
double segment_distance(const WireSegment& a, const WireSegment& b);

struct MeshedScene {
  std::vector<WireSegment> segments;  // real segments first, then images
  int n_real = 0;
  int source_port = -1;
  int reader_port = -1;
  int tag_port = -1;
  int tag_first = -1;  // tag block is the trailing wire of the real range
  int tag_count = 0;
  std::map<int, cplx> load_table;  // real segment index -> ohms (reader preloaded)
  bool ground = false;
  double ground_z = 0.0;
  double frequency_hz = 0.0;
  int segments_per_halfwave = 0;
};

// Wire order: source, reader, scatterers, tag last (keeps the tag block
// trailing for factorization reuse). Dipoles get segments_per_halfwave
// segments (odd, >= 5, so a feed/load center segment exists); scatterers are
// meshed at the same density with the lambda/10 cap. With a ground plane the
// mirrored images of all real segments are appended.
MeshedScene mesh_scene(const scene::Scene& s, int segments_per_halfwave = 11);

// Meshes a single wire as `count` equal segments with consecutive indices
// starting at index0. Used for re-posing the tag during sweeps.
std::vector<WireSegment> mesh_wire(const Vec3& center, const scene::OrientationAngles& o,
                                   double length, double radius, int count, int wire_id,
                                   int index0);

}  // namespace ambtag::mom

#endif
