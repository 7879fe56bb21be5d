// Copyright 2026 The sgs Authors. All rights reserved.
// Use of this source code is governed by the Apache-2.0 license
// that can be found in the LICENSE file.

#include "sgs/io.hpp"

#include <png.h>

#include <cstdio>
#include <cstring>
#include <fstream>
#include <random>

namespace sgs::io {
namespace {

void append_u32le(std::vector<uint8_t>& out, uint32_t v) {
  out.push_back(static_cast<uint8_t>(v & 0xff));
  out.push_back(static_cast<uint8_t>((v >> 8) & 0xff));
  out.push_back(static_cast<uint8_t>((v >> 16) & 0xff));
  out.push_back(static_cast<uint8_t>((v >> 24) & 0xff));
}

uint32_t read_u32le(const uint8_t* p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) |
         (static_cast<uint32_t>(p[3]) << 24);
}

// PGM header tokenizer: skips whitespace and '#' comments.
struct PnmParser {
  std::span<const uint8_t> bytes;
  size_t pos = 0;

  void skip_space() {
    while (pos < bytes.size()) {
      const uint8_t c = bytes[pos];
      if (c == '#') {
        while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
      } else if (std::isspace(c)) {
        ++pos;
      } else {
        break;
      }
    }
  }

  long next_int() {
    skip_space();
    long value = 0;
    bool any = false;
    while (pos < bytes.size() && std::isdigit(bytes[pos])) {
      value = value * 10 + (bytes[pos] - '0');
      ++pos;
      any = true;
    }
    if (!any) throw IoError("PGM: malformed header integer");
    return value;
  }
};

Gray16 decode_pgm(std::span<const uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') {
    throw IoError("PGM: missing P5 magic");
  }
  PnmParser parser{bytes, 2};
  const long width = parser.next_int();
  const long height = parser.next_int();
  const long maxval = parser.next_int();
  if (width < 1 || height < 1) throw IoError("PGM: bad dimensions");
  if (maxval < 1 || maxval > 65535) throw IoError("PGM: bad maxval");
  // Single whitespace byte separates the header from the raster.
  if (parser.pos >= bytes.size() || !std::isspace(bytes[parser.pos])) {
    throw IoError("PGM: truncated header");
  }
  ++parser.pos;

  Gray16 img;
  img.height = height;
  img.width = width;
  img.maxval = static_cast<uint16_t>(maxval);
  img.data.resize(static_cast<size_t>(width) * height);
  const size_t n = img.data.size();
  if (maxval <= 255) {
    if (bytes.size() - parser.pos < n) throw IoError("PGM: truncated raster");
    for (size_t i = 0; i < n; ++i) img.data[i] = bytes[parser.pos + i];
  } else {
    if (bytes.size() - parser.pos < 2 * n) throw IoError("PGM: truncated raster");
    for (size_t i = 0; i < n; ++i) {
      const uint8_t hi = bytes[parser.pos + 2 * i];
      const uint8_t lo = bytes[parser.pos + 2 * i + 1];
      img.data[i] = static_cast<uint16_t>((hi << 8) | lo);
    }
  }
  return img;
}

struct PngReadState {
  const uint8_t* data;
  size_t size;
  size_t pos;
};

void png_mem_read(png_structp png, png_bytep out, png_size_t count) {
  auto* state = static_cast<PngReadState*>(png_get_io_ptr(png));
  if (state->pos + count > state->size) {
    png_error(png, "unexpected end of PNG stream");
  }
  std::memcpy(out, state->data + state->pos, count);
  state->pos += count;
}

Raster8 decode_png(std::span<const uint8_t> bytes) {
  png_structp png =
      png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw IoError("PNG: failed to allocate reader");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw IoError("PNG: failed to allocate info");
  }

  Raster8 out;
  std::vector<png_bytep> rows;
  PngReadState state{bytes.data(), bytes.size(), 0};
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw IoError("PNG: decode failed (corrupt stream?)");
  }
  png_set_read_fn(png, &state, png_mem_read);
  png_read_info(png, info);

  const png_uint_32 width = png_get_image_width(png, info);
  const png_uint_32 height = png_get_image_height(png, info);
  const int bit_depth = png_get_bit_depth(png, info);
  const int color_type = png_get_color_type(png, info);
  if (bit_depth == 16) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw IoError("PNG: 16-bit depth unsupported, expected 8-bit raster");
  }
  if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) {
    png_set_expand_gray_1_2_4_to_8(png);
  }
  if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
  png_set_strip_alpha(png);
  png_read_update_info(png, info);

  const Index channels = png_get_channels(png, info);
  if (channels != 1 && channels != 3) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw IoError("PNG: unsupported channel count " + std::to_string(channels));
  }
  out.height = height;
  out.width = width;
  out.channels = channels;
  out.data.resize(static_cast<size_t>(height) * width * channels);
  rows.resize(height);
  for (png_uint_32 y = 0; y < height; ++y) {
    rows[y] = out.data.data() + static_cast<size_t>(y) * width * channels;
  }
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return out;
}

}  // namespace

Raster8 decode_image(std::span<const uint8_t> bytes) {
  if (bytes.size() >= 8 && bytes[0] == 0x89 && bytes[1] == 'P' &&
      bytes[2] == 'N' && bytes[3] == 'G') {
    return decode_png(bytes);
  }
  if (bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] == '5') {
    Gray16 pgm = decode_pgm(bytes);
    if (pgm.maxval > 255) {
      throw IoError("PGM: 16-bit depth unsupported, expected 8-bit raster");
    }
    Raster8 out;
    out.height = pgm.height;
    out.width = pgm.width;
    out.channels = 1;
    out.data.assign(pgm.data.begin(), pgm.data.end());
    return out;
  }
  throw IoError("unrecognized image format (expected PNG or binary PGM)");
}

Raster8 read_image(const std::filesystem::path& path) {
  const std::vector<uint8_t> bytes = read_file(path);
  return decode_image(bytes);
}

void write_pgm8(const std::filesystem::path& path, Index height, Index width,
                std::span<const uint8_t> pixels) {
  if (pixels.size() != static_cast<size_t>(height * width)) {
    throw IoError("write_pgm8: pixel count does not match dimensions");
  }
  std::string header = "P5\n" + std::to_string(width) + " " +
                       std::to_string(height) + "\n255\n";
  std::vector<uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), pixels.begin(), pixels.end());
  atomic_write(path, out);
}

void write_pgm16(const std::filesystem::path& path, Index height, Index width,
                 std::span<const uint16_t> pixels) {
  if (pixels.size() != static_cast<size_t>(height * width)) {
    throw IoError("write_pgm16: pixel count does not match dimensions");
  }
  std::string header = "P5\n" + std::to_string(width) + " " +
                       std::to_string(height) + "\n65535\n";
  std::vector<uint8_t> out(header.begin(), header.end());
  out.reserve(out.size() + pixels.size() * 2);
  for (const uint16_t v : pixels) {
    out.push_back(static_cast<uint8_t>(v >> 8));  // big-endian samples
    out.push_back(static_cast<uint8_t>(v & 0xff));
  }
  atomic_write(path, out);
}

Gray16 read_pgm(const std::filesystem::path& path) {
  const std::vector<uint8_t> bytes = read_file(path);
  return decode_pgm(bytes);
}

void write_fmap(const std::filesystem::path& path, const FeatureMap& fm) {
  validate(fm);
  std::vector<uint8_t> out;
  out.reserve(20 + static_cast<size_t>(fm.pixels()) * fm.dim * 4);
  out.insert(out.end(), {'F', 'M', 'A', 'P'});
  append_u32le(out, 1);
  append_u32le(out, static_cast<uint32_t>(fm.height));
  append_u32le(out, static_cast<uint32_t>(fm.width));
  append_u32le(out, static_cast<uint32_t>(fm.dim));
  static_assert(sizeof(float) == 4);
  for (Index i = 0; i < fm.data.rows(); ++i) {
    for (Index c = 0; c < fm.dim; ++c) {
      const float v = static_cast<float>(fm.data(i, c));
      uint32_t bits;
      std::memcpy(&bits, &v, 4);
      append_u32le(out, bits);
    }
  }
  atomic_write(path, out);
}

FeatureMap decode_fmap(std::span<const uint8_t> bytes) {
  if (bytes.size() < 20 || std::memcmp(bytes.data(), "FMAP", 4) != 0) {
    throw IoError("FMAP: missing magic");
  }
  const uint32_t version = read_u32le(bytes.data() + 4);
  if (version != 1) {
    throw IoError("FMAP: unsupported version " + std::to_string(version));
  }
  const uint32_t height = read_u32le(bytes.data() + 8);
  const uint32_t width = read_u32le(bytes.data() + 12);
  const uint32_t dim = read_u32le(bytes.data() + 16);
  if (height == 0 || width == 0 || dim == 0) {
    throw IoError("FMAP: zero dimension");
  }
  const size_t count = static_cast<size_t>(height) * width * dim;
  if (bytes.size() - 20 < count * 4) throw IoError("FMAP: truncated payload");
  FeatureMap fm = make_feature_map(height, width, dim);
  const uint8_t* p = bytes.data() + 20;
  for (Index i = 0; i < fm.data.rows(); ++i) {
    for (Index c = 0; c < fm.dim; ++c, p += 4) {
      const uint32_t bits = read_u32le(p);
      float v;
      std::memcpy(&v, &bits, 4);
      fm.data(i, c) = v;
    }
  }
  return fm;
}

FeatureMap read_fmap(const std::filesystem::path& path) {
  const std::vector<uint8_t> bytes = read_file(path);
  return decode_fmap(bytes);
}

std::vector<uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  return bytes;
}

void atomic_write(const std::filesystem::path& path,
                  std::span<const uint8_t> bytes) {
  namespace fs = std::filesystem;
  const fs::path dir = path.has_parent_path() ? path.parent_path() : ".";
  std::error_code ec;
  fs::create_directories(dir, ec);

  static std::mt19937_64 tmp_rng{std::random_device{}()};
  const fs::path tmp =
      dir / (".tmp." + std::to_string(tmp_rng()) + path.filename().string());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("short write to " + tmp.string());
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw IoError("rename to " + path.string() + " failed: " + ec.message());
  }
}

void atomic_write(const std::filesystem::path& path, const std::string& text) {
  atomic_write(path, std::span<const uint8_t>(
                         reinterpret_cast<const uint8_t*>(text.data()),
                         text.size()));
}

}  // namespace sgs::io
