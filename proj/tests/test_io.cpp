// Copyright 2026 The sgs Authors. All rights reserved.
// Use of this source code is governed by the Apache-2.0 license
// that can be found in the LICENSE file.

#include "sgs/io.hpp"

#include <cstdio>
#include <filesystem>
#include <random>

#include "doctest.h"

using namespace sgs;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("sgs_io_test_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

}  // namespace

TEST_SUITE_BEGIN("io");

TEST_CASE("fmap round trip is bit exact") {
  TempDir tmp;
  FeatureMap fm = make_feature_map(3, 2, 4);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<float> unif(-100, 100);
  for (Index i = 0; i < fm.data.rows(); ++i) {
    for (Index c = 0; c < fm.dim; ++c) fm.data(i, c) = unif(rng);
  }
  const fs::path file = tmp.path / "t.fmap";
  io::write_fmap(file, fm);

  // Header layout: magic, version, height, width, dim as u32 LE.
  const std::vector<uint8_t> bytes = io::read_file(file);
  REQUIRE(bytes.size() == 20 + 3 * 2 * 4 * 4);
  CHECK(bytes[0] == 'F');
  CHECK(bytes[3] == 'P');
  CHECK(bytes[4] == 1);  // version LE
  CHECK(bytes[8] == 3);  // height LE
  CHECK(bytes[12] == 2);
  CHECK(bytes[16] == 4);

  const FeatureMap back = io::read_fmap(file);
  CHECK(back.height == fm.height);
  CHECK(back.width == fm.width);
  CHECK(back.dim == fm.dim);
  CHECK((back.data.array() == fm.data.array()).all());
}

TEST_CASE("fmap decode rejects bad inputs") {
  std::vector<uint8_t> junk = {'F', 'M', 'A', 'P', 2, 0, 0, 0};
  CHECK_THROWS_AS(io::decode_fmap(junk), io::IoError);
  std::vector<uint8_t> truncated = {'F', 'M', 'A', 'P', 1, 0, 0, 0,
                                    1,   0,   0,   0,   1, 0, 0, 0,
                                    2,   0,   0,   0,   0, 0};
  CHECK_THROWS_AS(io::decode_fmap(truncated), io::IoError);
}

TEST_CASE("pgm8 round trip") {
  TempDir tmp;
  const std::vector<uint8_t> pixels = {0, 17, 255, 64, 128, 3};
  const fs::path file = tmp.path / "t.pgm";
  io::write_pgm8(file, 2, 3, pixels);
  const io::Gray16 back = io::read_pgm(file);
  CHECK(back.height == 2);
  CHECK(back.width == 3);
  CHECK(back.maxval == 255);
  for (size_t i = 0; i < pixels.size(); ++i) CHECK(back.data[i] == pixels[i]);
}

TEST_CASE("pgm16 samples are written big-endian") {
  TempDir tmp;
  const std::vector<uint16_t> pixels = {0x0102, 0xfffe};
  const fs::path file = tmp.path / "t16.pgm";
  io::write_pgm16(file, 1, 2, pixels);
  const std::vector<uint8_t> bytes = io::read_file(file);
  const std::string header = "P5\n2 1\n65535\n";
  REQUIRE(bytes.size() == header.size() + 4);
  CHECK(bytes[header.size()] == 0x01);
  CHECK(bytes[header.size() + 1] == 0x02);
  CHECK(bytes[header.size() + 2] == 0xff);
  CHECK(bytes[header.size() + 3] == 0xfe);

  const io::Gray16 back = io::read_pgm(file);
  CHECK(back.maxval == 65535);
  CHECK(back.data[0] == 0x0102);
  CHECK(back.data[1] == 0xfffe);
}

TEST_CASE("atomic write replaces existing content") {
  TempDir tmp;
  const fs::path file = tmp.path / "x.bin";
  io::atomic_write(file, std::string("first"));
  io::atomic_write(file, std::string("second"));
  const std::vector<uint8_t> bytes = io::read_file(file);
  CHECK(std::string(bytes.begin(), bytes.end()) == "second");
  // No temp droppings left behind.
  size_t entries = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(tmp.path)) {
    ++entries;
  }
  CHECK(entries == 1);
}

TEST_CASE("pgm decode handles comments and rejects garbage") {
  const std::string with_comment = "P5\n# a comment\n2 1\n255\n";
  std::vector<uint8_t> bytes(with_comment.begin(), with_comment.end());
  bytes.push_back(9);
  bytes.push_back(8);
  const io::Raster8 img = io::decode_image(bytes);
  CHECK(img.height == 1);
  CHECK(img.width == 2);
  CHECK(img.data[0] == 9);

  const std::string bad = "P5\nnope\n";
  std::vector<uint8_t> bad_bytes(bad.begin(), bad.end());
  CHECK_THROWS_AS(io::decode_image(bad_bytes), io::IoError);
}

TEST_SUITE_END();
