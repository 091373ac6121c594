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

#include "topo2d/imageio.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace topo2d::io {

PbmParseError::PbmParseError(Kind kind, std::size_t offset, const std::string& what)
    : std::runtime_error("PBM " + std::string(to_string(kind)) + " at byte " +
                         std::to_string(offset) + ": " + what),
      kind_(kind),
      offset_(offset) {}

std::string_view to_string(PbmParseError::Kind kind) {
  using Kind = PbmParseError::Kind;
  switch (kind) {
    case Kind::BadMagic:
      return "bad magic number";
    case Kind::BadDimensions:
      return "bad dimensions";
    case Kind::DimensionOverflow:
      return "dimension overflow";
    case Kind::BadPixel:
      return "bad pixel";
    case Kind::Truncated:
      return "truncated data";
  }
  return "error";
}

namespace {

using Kind = PbmParseError::Kind;

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

class Reader {
 public:
  explicit Reader(std::string_view bytes) : bytes_(bytes) {}

  std::size_t pos() const { return pos_; }
  bool done() const { return pos_ >= bytes_.size(); }
  char peek() const { return bytes_[pos_]; }
  std::string_view rest() const { return bytes_.substr(pos_); }
  void advance(std::size_t n) { pos_ += n; }

  void skip_space_and_comments() {
    while (!done()) {
      if (is_space(peek())) {
        ++pos_;
      } else if (peek() == '#') {
        while (!done() && peek() != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  int dimension(const char* what) {
    skip_space_and_comments();
    const std::size_t start = pos_;
    if (done()) throw PbmParseError(Kind::BadDimensions, start, std::string("missing ") + what);
    std::uint64_t value = 0;
    while (!done() && peek() >= '0' && peek() <= '9') {
      value = value * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (value > static_cast<std::uint64_t>(std::numeric_limits<int>::max())) {
        throw PbmParseError(Kind::DimensionOverflow, start, std::string(what) + " too large");
      }
      ++pos_;
    }
    if (pos_ == start) {
      throw PbmParseError(Kind::BadDimensions, start, std::string("non-numeric ") + what);
    }
    if (!done() && !is_space(peek()) && peek() != '#') {
      throw PbmParseError(Kind::BadDimensions, pos_, std::string("non-numeric ") + what);
    }
    if (value == 0) throw PbmParseError(Kind::BadDimensions, start, std::string(what) + " is zero");
    return static_cast<int>(value);
  }

 private:
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

void read_plain_raster(Reader& in, BinaryImage& img) {
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      in.skip_space_and_comments();
      if (in.done()) {
        throw PbmParseError(Kind::Truncated, in.pos(), "raster ends before all pixels were read");
      }
      const char c = in.peek();
      if (c != '0' && c != '1') {
        throw PbmParseError(Kind::BadPixel, in.pos(), std::string("unexpected character '") + c + "'");
      }
      img.set(x, y, c == '1');
      in.advance(1);
    }
  }
}

void read_raw_raster(Reader& in, BinaryImage& img) {
  // Exactly one whitespace byte separates the header from the raster.
  if (in.done() || !is_space(in.peek())) {
    throw PbmParseError(Kind::Truncated, in.pos(), "missing raster after header");
  }
  in.advance(1);
  const std::size_t row_bytes = (static_cast<std::size_t>(img.width()) + 7) / 8;
  const std::string_view raster = in.rest();
  if (raster.size() < row_bytes * static_cast<std::size_t>(img.height())) {
    throw PbmParseError(Kind::Truncated, in.pos() + raster.size(),
                        "expected " + std::to_string(row_bytes * img.height()) +
                            " raster bytes, got " + std::to_string(raster.size()));
  }
  for (int y = 0; y < img.height(); ++y) {
    const auto* row = reinterpret_cast<const unsigned char*>(raster.data()) + y * row_bytes;
    for (int x = 0; x < img.width(); ++x) {
      img.set(x, y, (row[x / 8] >> (7 - x % 8)) & 1u);
    }
  }
}

}  // namespace

BinaryImage read_pbm(std::string_view bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '1' && bytes[1] != '4')) {
    throw PbmParseError(Kind::BadMagic, 0, "expected P1 or P4");
  }
  const bool raw = bytes[1] == '4';
  Reader in(bytes);
  in.advance(2);
  if (!in.done() && !is_space(in.peek()) && in.peek() != '#') {
    throw PbmParseError(Kind::BadMagic, 2, "magic number not followed by whitespace");
  }
  const std::size_t dims_at = in.pos();
  const int width = in.dimension("width");
  const int height = in.dimension("height");
  if (static_cast<std::uint64_t>(width) * static_cast<std::uint64_t>(height) > kMaxPixels) {
    throw PbmParseError(Kind::DimensionOverflow, dims_at, "pixel count too large");
  }

  BinaryImage img(width, height);
  if (raw) {
    read_raw_raster(in, img);
  } else {
    read_plain_raster(in, img);
  }
  return img;
}

std::string write_pbm(const BinaryImage& img) {
  std::string out = "P1\n" + std::to_string(img.width()) + " " + std::to_string(img.height()) + "\n";
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      if (x > 0) out += ' ';
      out += img.at(x, y) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

Palette Palette::defaults() {
  Palette p;
  p.colors_[static_cast<std::size_t>(PointClass::Background)] = {255, 255, 255};
  p.colors_[static_cast<std::size_t>(PointClass::Isolated)] = {230, 25, 75};
  p.colors_[static_cast<std::size_t>(PointClass::Interior)] = {128, 128, 128};
  p.colors_[static_cast<std::size_t>(PointClass::Simple)] = {60, 180, 75};
  p.colors_[static_cast<std::size_t>(PointClass::Curve)] = {0, 130, 200};
  p.colors_[static_cast<std::size_t>(PointClass::Junction3)] = {245, 130, 48};
  p.colors_[static_cast<std::size_t>(PointClass::Junction4)] = {240, 50, 230};
  return p;
}

Palette Palette::parse(std::string_view text) {
  Palette p = defaults();
  std::istringstream lines{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string name;
    if (!(fields >> name)) continue;

    const auto where = "palette line " + std::to_string(lineno) + ": ";
    const auto cls = parse_class_name(name);
    if (!cls) throw std::invalid_argument(where + "unknown class '" + name + "'");
    int r = 0, g = 0, b = 0;
    std::string extra;
    if (!(fields >> r >> g >> b) || (fields >> extra)) {
      throw std::invalid_argument(where + "expected '<ClassName> <r> <g> <b>'");
    }
    for (int v : {r, g, b}) {
      if (v < 0 || v > 255) throw std::invalid_argument(where + "channel out of range 0-255");
    }
    p.colors_[static_cast<std::size_t>(*cls)] = {static_cast<std::uint8_t>(r),
                                                 static_cast<std::uint8_t>(g),
                                                 static_cast<std::uint8_t>(b)};
  }
  for (std::size_t i = 0; i < p.colors_.size(); ++i) {
    for (std::size_t j = i + 1; j < p.colors_.size(); ++j) {
      if (p.colors_[i] == p.colors_[j]) {
        throw std::invalid_argument("palette: " + std::string(class_name(kAllPointClasses[i])) +
                                    " and " + std::string(class_name(kAllPointClasses[j])) +
                                    " share a colour");
      }
    }
  }
  return p;
}

std::string render_classification(const ClassMap& map, const Palette& palette) {
  std::string out =
      "P6\n" + std::to_string(map.width()) + " " + std::to_string(map.height()) + "\n255\n";
  out.reserve(out.size() + map.raw().size() * 3);
  for (std::uint8_t v : map.raw()) {
    const Rgb& c = palette[static_cast<PointClass>(v)];
    out += static_cast<char>(c.r);
    out += static_cast<char>(c.g);
    out += static_cast<char>(c.b);
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw std::runtime_error("error reading " + path.string());
  return std::move(ss).str();
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out) throw std::runtime_error("error writing " + path.string());
}

}  // namespace topo2d::io
