// SPDX-FileCopyrightText: 2026 The frontier-explore authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "frontier/core/raster.hpp"
#include "frontier/world/voxel_grid.hpp"

namespace frontier {

/// Text scene format:
///   voxscene 1
///   dims nx ny nz
///   res v
///   origin ox oy oz
/// followed by nz blocks (z ascending) of ny rows of nx characters from
/// {O, F, U}, blocks separated by blank lines.
VoxelGrid load_scene(std::string_view text);
std::string save_scene(const VoxelGrid& grid);

VoxelGrid read_scene_file(const std::filesystem::path& path);
void write_scene_file(const std::filesystem::path& path, const VoxelGrid& grid);

/// Binary range image: "FDEP", u32 width, u32 height, u32 reserved, then
/// width * height little-endian float32 values row-major, NO_RETURN = +inf.
std::string encode_fdep(const Raster<double>& image);
Raster<double> decode_fdep(std::string_view bytes);
void write_fdep_file(const std::filesystem::path& path, const Raster<double>& image);
Raster<double> read_fdep_file(const std::filesystem::path& path);

/// Binary 8-bit PGM (P5, maxval 255).
std::string encode_pgm(const Mask& image);
void write_pgm_file(const std::filesystem::path& path, const Mask& image);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace frontier
