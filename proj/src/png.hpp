// SPDX-FileCopyrightText: Copyright (c) 2026 ambtag contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef AMBTAG_PNG_HPP
#define AMBTAG_PNG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sweep.hpp"

namespace ambtag::io {

// 8-bit RGB PNG, fixed compression settings so identical input gives
// identical bytes.
std::vector<std::uint8_t> encode_png_rgb(int width, int height,
                                         const std::vector<std::uint8_t>& rgb);

// Heatmap with the documented ramp: dark blue (lo) -> yellow -> red (hi),
// masked cells gray. `layer` selects a map layer, -1 renders the best map
// values. Cells are upscaled by an integer factor (>= 1); row 0 of the grid
// (y_min) ends up at the bottom of the image.
void write_heatmap_png(const std::string& path, const sweep::ContrastMap& m, int layer,
                       const sweep::BestPolarizationMap* best, double db_lo, double db_hi,
                       int pixel_scale = 8);

}  // namespace ambtag::io

#endif
