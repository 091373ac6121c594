// Copyright 2026 The topo2d Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "topo2d/grid.hpp"
#include "topo2d/topo.hpp"

namespace topo2d::io {

/// Largest accepted pixel count; anything bigger is reported as overflow.
inline constexpr std::uint64_t kMaxPixels = std::uint64_t{1} << 31;

class PbmParseError : public std::runtime_error {
 public:
  enum class Kind {
    BadMagic,           // not "P1" / "P4"
    BadDimensions,      // missing, non-numeric or zero width/height
    DimensionOverflow,  // width/height/pixel count out of range
    BadPixel,           // P1 raster character other than 0, 1 or whitespace
    Truncated,          // raster ends early
  };

  PbmParseError(Kind kind, std::size_t offset, const std::string& what);

  Kind kind() const { return kind_; }
  /// Byte offset into the input where the problem was detected.
  std::size_t offset() const { return offset_; }

 private:
  Kind kind_;
  std::size_t offset_;
};

std::string_view to_string(PbmParseError::Kind kind);

/// Parses plain (P1) or raw (P4) PBM. A 1 bit is black (object).
BinaryImage read_pbm(std::string_view bytes);

/// Plain P1 output, one image row per line.
std::string write_pbm(const BinaryImage& img);

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;
  friend constexpr bool operator==(const Rgb&, const Rgb&) = default;
};

/// Colour per PointClass (the six classes and Background), all distinct.
class Palette {
 public:
  static Palette defaults();

  /// Lines of `<ClassName> <r> <g> <b>`; `#` starts a comment. Classes not
  /// mentioned keep their default colour. Throws std::invalid_argument on
  /// syntax errors, out-of-range channels, unknown names or when the
  /// result has two classes sharing a colour.
  static Palette parse(std::string_view text);

  const Rgb& operator[](PointClass c) const { return colors_[static_cast<std::size_t>(c)]; }

 private:
  std::array<Rgb, kPointClassCount> colors_{};
};

/// Binary PPM (P6) of the map, one palette colour per pixel.
std::string render_classification(const ClassMap& map, const Palette& palette);

/// Throws std::runtime_error on I/O failure.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view bytes);

}  // namespace topo2d::io
