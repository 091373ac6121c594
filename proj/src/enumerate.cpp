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

#include "topo2d/enumerate.hpp"

#include <algorithm>
#include <numeric>

#include "topo2d/oracle.hpp"

namespace topo2d::enumerate {

int MarginalHistogram::total() const {
  return std::accumulate(counts.begin(), counts.end(), overflow);
}

int JointHistogram::total() const {
  int sum = overflow;
  for (const auto& row : counts) sum = std::accumulate(row.begin(), row.end(), sum);
  return sum;
}

MarginalHistogram JointHistogram::object_marginal() const {
  MarginalHistogram m;
  for (int k = 0; k <= kMaxNumber; ++k) {
    m.counts[k] = std::accumulate(counts[k].begin(), counts[k].end(), 0);
  }
  return m;
}

MarginalHistogram JointHistogram::complement_marginal() const {
  MarginalHistogram m;
  for (int k = 0; k <= kMaxNumber; ++k) {
    for (int kb = 0; kb <= kMaxNumber; ++kb) m.counts[kb] += counts[k][kb];
  }
  return m;
}

MarginalHistogram marginal_histogram(Connectivity n, Phase phase, const LocalTables& tables) {
  MarginalHistogram h;
  for (int m = 0; m < kConfigCount; ++m) {
    const int t = topological_number(Config{static_cast<std::uint8_t>(m)}, n, phase, tables);
    if (t > kMaxNumber) {
      ++h.overflow;
    } else {
      ++h.counts[t];
    }
  }
  return h;
}

JointHistogram joint_histogram(ConnPair pair, const LocalTables& tables) {
  JointHistogram h;
  for (int m = 0; m < kConfigCount; ++m) {
    const TopoPair tp = topo_pair(Config{static_cast<std::uint8_t>(m)}, pair, tables);
    if (tp.t > kMaxNumber || tp.t_bar > kMaxNumber) {
      ++h.overflow;
    } else {
      ++h.counts[tp.t][tp.t_bar];
    }
  }
  return h;
}

std::map<PointClass, int> class_census(ConnPair pair, const LocalTables& tables) {
  std::map<PointClass, int> census;
  for (int m = 0; m < kConfigCount; ++m) {
    ++census[classify(Config{static_cast<std::uint8_t>(m)}, pair, tables)];
  }
  return census;
}

MarginalHistogram reference_marginal(Connectivity n, Phase phase) {
  // The complement rows mirror the object rows: T_n on the white bits of c
  // is T_n on the black bits of ~c.
  (void)phase;
  if (n == Connectivity::Four) return MarginalHistogram{{16, 117, 102, 20, 1}, 0};
  return MarginalHistogram{{1, 132, 102, 20, 1}, 0};
}

JointHistogram reference_joint(ConnPair pair) {
  JointHistogram h;
  const bool four = pair.n() == Connectivity::Four;
  h.counts[0][1] = four ? 16 : 1;
  h.counts[1][0] = four ? 1 : 16;
  h.counts[1][1] = 116;
  h.counts[2][2] = 102;
  h.counts[3][3] = 20;
  h.counts[4][4] = 1;
  return h;
}

std::map<PointClass, int> reference_census(ConnPair pair) {
  const bool four = pair.n() == Connectivity::Four;
  return {{PointClass::Isolated, four ? 16 : 1}, {PointClass::Interior, four ? 1 : 16},
          {PointClass::Simple, 116},             {PointClass::Curve, 102},
          {PointClass::Junction3, 20},           {PointClass::Junction4, 1}};
}

BinaryImage embed_config(Config c) {
  BinaryImage img(3, 3);
  img.set(1, 1, true);
  for (int k = 0; k < 8; ++k) {
    if (c.black(k)) img.set(1 + kNeighborOffsets[k].x, 1 + kNeighborOffsets[k].y, true);
  }
  return img;
}

std::vector<int> VerificationReport::offending_masks() const {
  std::vector<int> masks;
  for (const auto& ce : counterexamples) masks.push_back(ce.config.mask);
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  return masks;
}

VerificationReport verify_local_characterization(const LocalTables& tables,
                                                 std::span<const int> masks) {
  std::vector<int> all;
  if (masks.empty()) {
    all.resize(kConfigCount);
    std::iota(all.begin(), all.end(), 0);
    masks = all;
  }

  VerificationReport report;
  constexpr Point kCenter{1, 1};
  for (int m : masks) {
    const Config c{static_cast<std::uint8_t>(m)};
    const BinaryImage canvas = embed_config(c);
    for (ConnPair pair : kBothPairs) {
      ++report.cases;
      const bool local = is_simple(c, pair, tables);
      const bool global = oracle::is_simple_global(canvas, kCenter, pair);
      if (local == global) {
        ++report.agreeing;
      } else {
        report.counterexamples.push_back({c, pair, local, global});
      }
    }
  }
  return report;
}

}  // namespace topo2d::enumerate
