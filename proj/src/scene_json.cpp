// SPDX-FileCopyrightText: Copyright (c) 2026 ambtag contributors
// SPDX-License-Identifier: Apache-2.0

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "scene.hpp"

namespace ambtag::scene {

using ojson = nlohmann::ordered_json;

namespace {

// nlohmann reports byte offsets; scene files are hand-editable so errors
// should point at a line instead.
[[noreturn]] void parse_fail(const std::string& text, std::size_t byte, const std::string& msg) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  throw Error(ErrCode::parse, "scene file: line " + std::to_string(line) + ": " + msg);
}

ojson dipole_to_json(const DipoleSpec& d, const char* role) {
  ojson j;
  j["center"] = {d.center.x, d.center.y, d.center.z};
  j["orientation"] = {{"phi_deg", d.orientation.phi_deg}, {"theta_deg", d.orientation.theta_deg}};
  j["length"] = d.length;
  j["wire_radius"] = d.wire_radius;
  j["role"] = role;
  j["load_ohms"] = {{"re", d.load_ohms.real()}, {"im", d.load_ohms.imag()}};
  return j;
}

Vec3 vec_from(const ojson& j, const char* key) {
  const auto& a = j.at(key);
  if (!a.is_array() || a.size() != 3)
    throw Error(ErrCode::parse, std::string("scene file: '") + key + "' must be [x, y, z]");
  return {a[0].get<double>(), a[1].get<double>(), a[2].get<double>()};
}

OrientationAngles angles_from(const ojson& j) {
  return {j.at("phi_deg").get<double>(), j.at("theta_deg").get<double>()};
}

DipoleSpec dipole_from(const ojson& j, DipoleRole role) {
  DipoleSpec d;
  d.center = vec_from(j, "center");
  d.orientation = angles_from(j.at("orientation"));
  d.length = j.at("length").get<double>();
  d.wire_radius = j.at("wire_radius").get<double>();
  d.role = role;
  if (j.contains("load_ohms"))
    d.load_ohms = {j["load_ohms"].at("re").get<double>(), j["load_ohms"].at("im").get<double>()};
  return d;
}

}  // namespace

std::string scene_to_json(const Scene& s) {
  ojson j;
  j["schema_version"] = 1;
  j["frequency_hz"] = s.frequency_hz;
  j["rng_seed"] = s.rng_seed;
  j["source"] = dipole_to_json(s.source, "source");
  j["reader"] = dipole_to_json(s.reader, "reader");
  j["tag_template"] = dipole_to_json(s.tag_template, "tag");
  ojson arr = ojson::array();
  for (const auto& sc : s.scatterers) {
    ojson e;
    e["center"] = {sc.center.x, sc.center.y, sc.center.z};
    e["orientation"] = {{"phi_deg", sc.orientation.phi_deg}, {"theta_deg", sc.orientation.theta_deg}};
    e["length"] = sc.length;
    e["wire_radius"] = sc.wire_radius;
    arr.push_back(e);
  }
  j["scatterers"] = arr;
  j["ground"] = {{"present", s.ground.present}, {"height_z", s.ground.height_z}};
  return j.dump(2) + "\n";
}

Scene scene_from_json(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    parse_fail(text, e.byte, e.what());
  }
  try {
    if (!j.contains("schema_version"))
      throw Error(ErrCode::parse, "scene file: missing mandatory schema_version");
    if (j["schema_version"].get<int>() != 1)
      throw Error(ErrCode::parse, "scene file: unsupported schema_version (expected 1)");

    Scene s;
    s.frequency_hz = j.at("frequency_hz").get<double>();
    s.rng_seed = j.value("rng_seed", std::uint64_t{1});
    s.source = dipole_from(j.at("source"), DipoleRole::Source);
    s.reader = dipole_from(j.at("reader"), DipoleRole::Reader);
    s.tag_template = dipole_from(j.at("tag_template"), DipoleRole::Tag);
    for (const auto& e : j.at("scatterers")) {
      ScattererSpec sc;
      sc.center = vec_from(e, "center");
      sc.orientation = angles_from(e.at("orientation"));
      sc.length = e.at("length").get<double>();
      sc.wire_radius = e.at("wire_radius").get<double>();
      s.scatterers.push_back(sc);
    }
    const auto& g = j.at("ground");
    s.ground.present = g.at("present").get<bool>();
    s.ground.height_z = g.at("height_z").get<double>();
    validate(s);
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrCode::parse, std::string("scene file: ") + e.what());
  }
}

Scene load_scene(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrCode::io, "cannot open scene file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return scene_from_json(ss.str());
}

void save_scene(const Scene& s, const std::string& path) {
  const std::string text = scene_to_json(s);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrCode::io, "cannot write scene file: " + path);
  out << text;
  if (!out.good()) throw Error(ErrCode::io, "short write on scene file: " + path);
}

PolarizationSet polset_from_json(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    parse_fail(text, e.byte, e.what());
  }
  try {
    PolarizationSet p;
    p.kind = PolSetKind::Custom;
    p.label = j.value("label", std::string("custom"));
    for (const auto& e : j.at("orientations")) p.orientations.push_back(angles_from(e));
    if (p.orientations.empty())
      throw Error(ErrCode::invalid_argument, "polarization set: orientations must be non-empty");
    for (std::size_t i = 0; i < p.orientations.size(); ++i)
      for (std::size_t k = i + 1; k < p.orientations.size(); ++k)
        if (p.orientations[i] == p.orientations[k])
          throw Error(ErrCode::invalid_argument, "polarization set: duplicate orientation");
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrCode::parse, std::string("polarization set file: ") + e.what());
  }
}

PolarizationSet load_polset(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrCode::io, "cannot open polarization set file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return polset_from_json(ss.str());
}

}  // namespace ambtag::scene
