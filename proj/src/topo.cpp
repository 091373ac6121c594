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

#include "topo2d/topo.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace topo2d {

Config config_of(const BinaryImage& img, Point p) {
  unsigned m = 0;
  for (int k = 0; k < 8; ++k) {
    const Point q{p.x + kNeighborOffsets[k].x, p.y + kNeighborOffsets[k].y};
    if (img.at(q)) m |= 1u << k;
  }
  return Config{static_cast<std::uint8_t>(m)};
}

std::vector<Point> config_points(Config c, Phase phase) {
  const bool want_black = phase == Phase::Object;
  std::vector<Point> out;
  for (int k = 0; k < 8; ++k) {
    if (c.black(k) == want_black) out.push_back(kNeighborOffsets[k]);
  }
  return out;
}

LocalTables LocalTables::build() {
  LocalTables tables;
  constexpr Point kCenter{0, 0};
  for (int m = 0; m < kConfigCount; ++m) {
    const Config c{static_cast<std::uint8_t>(m)};
    for (Connectivity n : {Connectivity::Four, Connectivity::Eight}) {
      for (Phase phase : {Phase::Object, Phase::Complement}) {
        const auto pts = config_points(c, phase);
        tables.set(c, n, phase,
                   static_cast<std::uint8_t>(count_components_adjacent_to(pts, kCenter, n)));
      }
    }
  }
  return tables;
}

const LocalTables& LocalTables::standard() {
  static const LocalTables tables = build();
  return tables;
}

int topological_number(Config c, Connectivity n, Phase phase, const LocalTables& tables) {
  return tables.number(c, n, phase);
}

TopoPair topo_pair(Config c, ConnPair pair, const LocalTables& tables) {
  return TopoPair{topological_number(c, pair.n(), Phase::Object, tables),
                  topological_number(c, pair.n_bar(), Phase::Complement, tables)};
}

bool is_simple(Config c, ConnPair pair, const LocalTables& tables) {
  return topo_pair(c, pair, tables) == TopoPair{1, 1};
}

namespace {

constexpr std::array<std::string_view, kPointClassCount> kNames = {
    "Isolated", "Interior", "Simple", "Curve", "Junction3", "Junction4", "Background"};
constexpr std::array<std::string_view, kPointClassCount> kLabels = {
    "isolated", "interior", "simple", "curve", "junction3", "junction4", "background"};

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

std::string fault_message(Config c, TopoPair tp) {
  return "impossible topological pair (" + std::to_string(tp.t) + "," +
         std::to_string(tp.t_bar) + ") for configuration mask " + std::to_string(c.mask);
}

}  // namespace

std::string_view class_name(PointClass c) { return kNames[static_cast<std::size_t>(c)]; }
std::string_view class_label(PointClass c) { return kLabels[static_cast<std::size_t>(c)]; }

std::optional<PointClass> parse_class_name(std::string_view name) {
  for (PointClass c : kAllPointClasses) {
    if (iequals(name, class_name(c))) return c;
  }
  return std::nullopt;
}

TopologyFault::TopologyFault(Config c, TopoPair tp)
    : std::logic_error(fault_message(c, tp)), config_(c), pair_(tp) {}

PointClass classify(Config c, ConnPair pair, const LocalTables& tables) {
  const TopoPair tp = topo_pair(c, pair, tables);
  if (tp == TopoPair{0, 1}) return PointClass::Isolated;
  if (tp == TopoPair{1, 0}) return PointClass::Interior;
  if (tp == TopoPair{1, 1}) return PointClass::Simple;
  if (tp == TopoPair{2, 2}) return PointClass::Curve;
  if (tp == TopoPair{3, 3}) return PointClass::Junction3;
  if (tp == TopoPair{4, 4}) return PointClass::Junction4;
  throw TopologyFault(c, tp);
}

bool is_curve_end(Config c, ConnPair pair, const LocalTables& tables) {
  if (c.black_count() != 1 || !is_simple(c, pair, tables)) return false;
  const int k = std::countr_zero(c.mask);
  return are_adjacent(kNeighborOffsets[k], Point{0, 0}, pair.n());
}

std::array<std::uint8_t, kConfigCount> class_lut(ConnPair pair, const LocalTables& tables) {
  std::array<std::uint8_t, kConfigCount> lut{};
  for (int m = 0; m < kConfigCount; ++m) {
    lut[m] = static_cast<std::uint8_t>(classify(Config{static_cast<std::uint8_t>(m)}, pair, tables));
  }
  return lut;
}

std::array<std::size_t, kPointClassCount> ClassMap::census() const {
  std::array<std::size_t, kPointClassCount> counts{};
  for (std::uint8_t v : data_) ++counts[v];
  return counts;
}

namespace {

// Zero-padded copy with one extra column on each side and one extra row above
// and below, so the row kernels can read x-1 and x+1 without bounds checks.
class PaddedBits {
 public:
  explicit PaddedBits(const BinaryImage& img)
      : stride_(static_cast<std::size_t>(img.width()) + 2),
        data_(stride_ * (static_cast<std::size_t>(img.height()) + 2), 0) {
    const auto bits = img.bits();
    const auto w = static_cast<std::size_t>(img.width());
    for (int y = 0; y < img.height(); ++y) {
      std::copy_n(bits.begin() + static_cast<std::ptrdiff_t>(y * w), w, row(y));
    }
  }

  // Column 0 of image row y; y may be -1 or height.
  std::uint8_t* row(int y) { return data_.data() + static_cast<std::size_t>(y + 1) * stride_ + 1; }

 private:
  std::size_t stride_;
  std::vector<std::uint8_t> data_;
};

}  // namespace

std::vector<std::uint8_t> config_map(const BinaryImage& img, kernels::Isa isa) {
  const auto& k = kernels::row_kernels(isa);
  PaddedBits padded(img);
  const auto w = static_cast<std::size_t>(img.width());
  std::vector<std::uint8_t> masks(w * static_cast<std::size_t>(img.height()));
  for (int y = 0; y < img.height(); ++y) {
    k.config_row(padded.row(y - 1), padded.row(y), padded.row(y + 1), masks.data() + y * w, w);
  }
  return masks;
}

ClassMap classify_image(const BinaryImage& img, ConnPair pair, kernels::Isa isa) {
  const auto& k = kernels::row_kernels(isa);
  const auto lut = class_lut(pair);
  PaddedBits padded(img);
  const auto w = static_cast<std::size_t>(img.width());
  std::vector<std::uint8_t> masks(w);
  ClassMap out(img.width(), img.height());
  auto dst = out.raw();
  for (int y = 0; y < img.height(); ++y) {
    k.config_row(padded.row(y - 1), padded.row(y), padded.row(y + 1), masks.data(), w);
    k.classify_row(masks.data(), padded.row(y), lut.data(),
                   static_cast<std::uint8_t>(PointClass::Background), dst.data() + y * w, w);
  }
  return out;
}

}  // namespace topo2d
