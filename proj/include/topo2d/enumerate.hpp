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
#include <map>
#include <span>
#include <vector>

#include "topo2d/topo.hpp"

// Exhaustive statistics over all 256 configurations of N8*(x).
namespace topo2d::enumerate {

inline constexpr int kMaxNumber = 4;

/// Histogram of one topological number over all configurations.
struct MarginalHistogram {
  std::array<int, kMaxNumber + 1> counts{};
  int overflow = 0;  // values above kMaxNumber

  int total() const;
  friend bool operator==(const MarginalHistogram&, const MarginalHistogram&) = default;
};

/// Joint histogram of (T_n(x,X), T_nbar(x, complement)), indexed [k][k_bar].
struct JointHistogram {
  std::array<std::array<int, kMaxNumber + 1>, kMaxNumber + 1> counts{};
  int overflow = 0;

  int total() const;
  MarginalHistogram object_marginal() const;
  MarginalHistogram complement_marginal() const;
  friend bool operator==(const JointHistogram&, const JointHistogram&) = default;
};

MarginalHistogram marginal_histogram(Connectivity n, Phase phase,
                                     const LocalTables& tables = LocalTables::standard());

JointHistogram joint_histogram(ConnPair pair, const LocalTables& tables = LocalTables::standard());

std::map<PointClass, int> class_census(ConnPair pair,
                                       const LocalTables& tables = LocalTables::standard());

/// Published reference counts for the 256 configurations.
MarginalHistogram reference_marginal(Connectivity n, Phase phase);
JointHistogram reference_joint(ConnPair pair);
std::map<PointClass, int> reference_census(ConnPair pair);

/// A 3x3 image whose centre is black and whose ring is the configuration.
BinaryImage embed_config(Config c);

struct Counterexample {
  Config config;
  ConnPair pair;
  bool local_simple;
  bool global_simple;
};

struct VerificationReport {
  int cases = 0;
  int agreeing = 0;
  std::vector<Counterexample> counterexamples;

  bool ok() const { return counterexamples.empty(); }
  /// Distinct offending masks, ascending.
  std::vector<int> offending_masks() const;
};

/// Compares the local simple-point test (table lookups) against the global
/// component-count test on the 3x3 embedding, for every mask in `masks`
/// (all 256 when empty) and both Jordan pairs.
VerificationReport verify_local_characterization(
    const LocalTables& tables = LocalTables::standard(), std::span<const int> masks = {});

}  // namespace topo2d::enumerate
