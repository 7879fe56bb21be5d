// Copyright 2026 The sgs Authors. All rights reserved.
// Use of this source code is governed by the Apache-2.0 license
// that can be found in the LICENSE file.

#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgs/image.hpp"

namespace sgs::io {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Decoded 8-bit raster, row-major, channel-last, 1 or 3 channels.
struct Raster8 {
  Index height = 0;
  Index width = 0;
  Index channels = 1;
  std::vector<uint8_t> data;
};

/// Grayscale raster of up to 16-bit samples (label maps and such).
struct Gray16 {
  Index height = 0;
  Index width = 0;
  uint16_t maxval = 65535;
  std::vector<uint16_t> data;
};

/// Decodes PNG or binary PGM, dispatching on the magic bytes. Only 8-bit
/// inputs are accepted; deeper rasters raise IoError naming the format.
Raster8 decode_image(std::span<const uint8_t> bytes);
Raster8 read_image(const std::filesystem::path& path);

void write_pgm8(const std::filesystem::path& path, Index height, Index width,
                std::span<const uint8_t> pixels);
/// 16-bit binary PGM (maxval 65535, big-endian samples per the format).
void write_pgm16(const std::filesystem::path& path, Index height, Index width,
                 std::span<const uint16_t> pixels);
/// Reads a binary PGM of either depth; 8-bit samples are widened verbatim.
Gray16 read_pgm(const std::filesystem::path& path);

/// FMAP container: "FMAP" magic, u32-LE version (=1), u32-LE height, width,
/// dim, then height*width*dim float32-LE values, row-major, channel-last.
void write_fmap(const std::filesystem::path& path, const FeatureMap& fm);
FeatureMap read_fmap(const std::filesystem::path& path);
FeatureMap decode_fmap(std::span<const uint8_t> bytes);

std::vector<uint8_t> read_file(const std::filesystem::path& path);

/// Writes to a temporary file in the target directory, then renames.
void atomic_write(const std::filesystem::path& path,
                  std::span<const uint8_t> bytes);
void atomic_write(const std::filesystem::path& path, const std::string& text);

}  // namespace sgs::io
