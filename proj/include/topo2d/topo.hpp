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
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "topo2d/grid.hpp"
#include "topo2d/kernels/isa.hpp"

namespace topo2d {

/// Neighbour offsets of N8*(x) in bit order: row-major over (dy, dx),
/// skipping the centre. Bit k of a Config refers to kNeighborOffsets[k].
inline constexpr std::array<Point, 8> kNeighborOffsets = {{
    {-1, -1}, {0, -1}, {1, -1},  // NW N NE
    {-1, 0},  {1, 0},            // W     E
    {-1, 1},  {0, 1},  {1, 1},   // SW S SE
}};

namespace bit {
inline constexpr std::uint8_t NW = 1u << 0;
inline constexpr std::uint8_t N = 1u << 1;
inline constexpr std::uint8_t NE = 1u << 2;
inline constexpr std::uint8_t W = 1u << 3;
inline constexpr std::uint8_t E = 1u << 4;
inline constexpr std::uint8_t SW = 1u << 5;
inline constexpr std::uint8_t S = 1u << 6;
inline constexpr std::uint8_t SE = 1u << 7;
/// The four 4-neighbours of the centre.
inline constexpr std::uint8_t kFourNeighbors = N | W | E | S;
}  // namespace bit

/// Black/white state of the 8 neighbours of a point (its local configuration).
struct Config {
  std::uint8_t mask = 0;

  constexpr bool black(int k) const { return (mask >> k) & 1u; }
  constexpr Config complement() const { return Config{static_cast<std::uint8_t>(~mask)}; }
  constexpr int black_count() const { return std::popcount(mask); }

  friend constexpr bool operator==(Config, Config) = default;
};

inline constexpr int kConfigCount = 256;

/// Which side of the configuration a topological number is taken on.
enum class Phase : std::uint8_t { Object, Complement };

/// Configuration of p in img; out-of-image neighbours are white. p itself
/// may lie outside the image.
Config config_of(const BinaryImage& img, Point p);

/// Black (Object) or white (Complement) neighbours of a configuration, as
/// literal points around the origin.
std::vector<Point> config_points(Config c, Phase phase);

/// Topological numbers for every (mask, connectivity, phase), precomputed
/// by component labelling of the literal 3x3 point sets.
class LocalTables {
 public:
  /// The process-wide tables, built on first use.
  static const LocalTables& standard();

  /// Builds fresh tables from the grid component machinery.
  static LocalTables build();

  std::uint8_t number(Config c, Connectivity n, Phase phase) const {
    return table_[slot(n, phase)][c.mask];
  }

  /// Overwrites one entry. Only useful for fault-injection in tests.
  void set(Config c, Connectivity n, Phase phase, std::uint8_t value) {
    table_[slot(n, phase)][c.mask] = value;
  }

 private:
  LocalTables() = default;

  static constexpr std::size_t slot(Connectivity n, Phase phase) {
    return (n == Connectivity::Four ? 0u : 2u) + (phase == Phase::Object ? 0u : 1u);
  }

  std::array<std::array<std::uint8_t, kConfigCount>, 4> table_{};
};

/// T_n(x, S): number of n-components of S (the black or white neighbours,
/// depending on `phase`) that are n-adjacent to the centre.
int topological_number(Config c, Connectivity n, Phase phase,
                       const LocalTables& tables = LocalTables::standard());

struct TopoPair {
  int t = 0;      // T_n(x, X)
  int t_bar = 0;  // T_nbar(x, complement of X)

  friend constexpr bool operator==(const TopoPair&, const TopoPair&) = default;
};

TopoPair topo_pair(Config c, ConnPair pair, const LocalTables& tables = LocalTables::standard());

/// A point is simple iff its topological pair is (1,1).
bool is_simple(Config c, ConnPair pair, const LocalTables& tables = LocalTables::standard());

enum class PointClass : std::uint8_t {
  Isolated = 0,
  Interior,
  Simple,
  Curve,
  Junction3,
  Junction4,
  Background,  // non-object pixels in whole-image maps
};

inline constexpr int kPointClassCount = 7;

inline constexpr std::array<PointClass, kPointClassCount> kAllPointClasses = {
    PointClass::Isolated,  PointClass::Interior,  PointClass::Simple,    PointClass::Curve,
    PointClass::Junction3, PointClass::Junction4, PointClass::Background};

/// "Isolated", "Junction3", ...
std::string_view class_name(PointClass c);
/// Lower-case display label: "isolated", "junction3", ...
std::string_view class_label(PointClass c);
/// Case-insensitive inverse of class_name.
std::optional<PointClass> parse_class_name(std::string_view name);

/// Raised when a topological pair falls outside the six supported values.
/// This can only come from a corrupted table or an implementation bug.
class TopologyFault : public std::logic_error {
 public:
  TopologyFault(Config c, TopoPair tp);
  Config config() const { return config_; }
  TopoPair pair() const { return pair_; }

 private:
  Config config_;
  TopoPair pair_;
};

/// One of the six object classes; never Background. Throws TopologyFault.
PointClass classify(Config c, ConnPair pair, const LocalTables& tables = LocalTables::standard());

/// Simple point with exactly one black neighbour, that neighbour being
/// n-adjacent to the centre.
bool is_curve_end(Config c, ConnPair pair, const LocalTables& tables = LocalTables::standard());

/// classify() for all 256 masks, as bytes; the input of the row kernels.
std::array<std::uint8_t, kConfigCount> class_lut(ConnPair pair,
                                                 const LocalTables& tables = LocalTables::standard());

/// Per-pixel class map with the same dimensions as the source image.
class ClassMap {
 public:
  ClassMap(int width, int height)
      : width_(width), height_(height),
        data_(static_cast<std::size_t>(width) * static_cast<std::size_t>(height),
              static_cast<std::uint8_t>(PointClass::Background)) {}

  int width() const { return width_; }
  int height() const { return height_; }

  PointClass at(int x, int y) const {
    return static_cast<PointClass>(data_[static_cast<std::size_t>(y) * width_ + x]);
  }
  void set(int x, int y, PointClass c) {
    data_[static_cast<std::size_t>(y) * width_ + x] = static_cast<std::uint8_t>(c);
  }

  std::span<std::uint8_t> raw() { return data_; }
  std::span<const std::uint8_t> raw() const { return data_; }

  /// Pixel count per class, indexed by the class value.
  std::array<std::size_t, kPointClassCount> census() const;

  friend bool operator==(const ClassMap&, const ClassMap&) = default;

 private:
  int width_;
  int height_;
  std::vector<std::uint8_t> data_;
};

/// Configuration mask of every pixel, row-major, computed with the given
/// kernel set.
std::vector<std::uint8_t> config_map(const BinaryImage& img,
                                     kernels::Isa isa = kernels::best_isa());

/// Object pixels get classify(config_of(img, p), pair); others Background.
ClassMap classify_image(const BinaryImage& img, ConnPair pair,
                        kernels::Isa isa = kernels::best_isa());

}  // namespace topo2d
