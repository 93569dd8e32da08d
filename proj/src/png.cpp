// SPDX-FileCopyrightText: Copyright (c) 2026 ambtag contributors
// SPDX-License-Identifier: Apache-2.0

#include "png.hpp"

#include <zlib.h>

#include <algorithm>
#include <cstring>
#include <fstream>

namespace ambtag::io {

namespace {

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 24));
  out.push_back(static_cast<std::uint8_t>(v >> 16));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

void put_chunk(std::vector<std::uint8_t>& out, const char type[4],
               const std::vector<std::uint8_t>& data) {
  put_u32(out, static_cast<std::uint32_t>(data.size()));
  const std::size_t crc_start = out.size();
  out.insert(out.end(), type, type + 4);
  out.insert(out.end(), data.begin(), data.end());
  const uLong crc = crc32(0L, out.data() + crc_start, static_cast<uInt>(out.size() - crc_start));
  put_u32(out, static_cast<std::uint32_t>(crc));
}

}  // namespace

std::vector<std::uint8_t> encode_png_rgb(int width, int height,
                                         const std::vector<std::uint8_t>& rgb) {
  if (width <= 0 || height <= 0 || rgb.size() != static_cast<std::size_t>(width) * height * 3)
    throw Error(ErrCode::invalid_argument, "png: bad image dimensions");

  // raw scanlines, filter byte 0 per row
  std::vector<std::uint8_t> raw;
  raw.reserve(static_cast<std::size_t>(height) * (width * 3 + 1));
  for (int y = 0; y < height; ++y) {
    raw.push_back(0);
    const std::uint8_t* row = rgb.data() + static_cast<std::size_t>(y) * width * 3;
    raw.insert(raw.end(), row, row + width * 3);
  }

  uLongf bound = compressBound(static_cast<uLong>(raw.size()));
  std::vector<std::uint8_t> compressed(bound);
  if (compress2(compressed.data(), &bound, raw.data(), static_cast<uLong>(raw.size()), 9) != Z_OK)
    throw Error(ErrCode::internal, "png: deflate failed");
  compressed.resize(bound);

  std::vector<std::uint8_t> png = {0x89, 'P', 'N', 'G', 0x0d, 0x0a, 0x1a, 0x0a};
  std::vector<std::uint8_t> ihdr;
  put_u32(ihdr, static_cast<std::uint32_t>(width));
  put_u32(ihdr, static_cast<std::uint32_t>(height));
  ihdr.push_back(8);  // bit depth
  ihdr.push_back(2);  // truecolor
  ihdr.push_back(0);
  ihdr.push_back(0);
  ihdr.push_back(0);
  put_chunk(png, "IHDR", ihdr);
  put_chunk(png, "IDAT", compressed);
  put_chunk(png, "IEND", {});
  return png;
}

namespace {

struct Rgb {
  std::uint8_t r, g, b;
};

// documented ramp: 0 -> (13,8,135), 0.5 -> (252,229,80), 1 -> (205,36,31)
Rgb ramp(double t) {
  t = std::clamp(t, 0.0, 1.0);
  auto lerp = [](double a, double b, double u) {
    return static_cast<std::uint8_t>(std::lround(a + (b - a) * u));
  };
  if (t < 0.5) {
    const double u = t / 0.5;
    return {lerp(13, 252, u), lerp(8, 229, u), lerp(135, 80, u)};
  }
  const double u = (t - 0.5) / 0.5;
  return {lerp(252, 205, u), lerp(229, 36, u), lerp(80, 31, u)};
}

}  // namespace

void write_heatmap_png(const std::string& path, const sweep::ContrastMap& m, int layer,
                       const sweep::BestPolarizationMap* best, double db_lo, double db_hi,
                       int pixel_scale) {
  if (!(db_hi > db_lo)) throw Error(ErrCode::invalid_argument, "heatmap dB range must be increasing");
  if (layer < 0 && best == nullptr)
    throw Error(ErrCode::invalid_argument, "heatmap: best map not provided");
  if (layer >= static_cast<int>(m.layers.size()))
    throw Error(ErrCode::invalid_argument, "heatmap: layer index out of range");
  const int scale = std::clamp(pixel_scale, 1, 64);
  const int nx = m.grid.nx(), ny = m.grid.ny();
  const int w = nx * scale, h = ny * scale;

  std::vector<std::uint8_t> rgb(static_cast<std::size_t>(w) * h * 3);
  for (int iy = 0; iy < ny; ++iy) {
    for (int ix = 0; ix < nx; ++ix) {
      const int c = iy * nx + ix;
      Rgb px{128, 128, 128};
      if (!m.mask[c]) {
        const double v = (layer >= 0) ? m.layers[layer][c] : best->best_delta_snr_db[c];
        px = ramp((v - db_lo) / (db_hi - db_lo));
      }
      for (int sy = 0; sy < scale; ++sy) {
        const int py = (ny - 1 - iy) * scale + sy;  // y_min at the bottom
        for (int sx = 0; sx < scale; ++sx) {
          const std::size_t o = (static_cast<std::size_t>(py) * w + ix * scale + sx) * 3;
          rgb[o] = px.r;
          rgb[o + 1] = px.g;
          rgb[o + 2] = px.b;
        }
      }
    }
  }
  const auto png = encode_png_rgb(w, h, rgb);
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(ErrCode::io, "cannot write image: " + path);
  f.write(reinterpret_cast<const char*>(png.data()), static_cast<std::streamsize>(png.size()));
  if (!f.good()) throw Error(ErrCode::io, "short write: " + path);
}

}  // namespace ambtag::io
