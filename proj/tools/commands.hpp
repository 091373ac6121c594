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

#include <filesystem>
#include <iosfwd>
#include <optional>

#include "topo2d/grid.hpp"
#include "topo2d/topo.hpp"

namespace topo2d::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 1,     // unreadable/malformed input or bad arguments
  kExitWrite = 2,     // output could not be written
  kExitMismatch = 3,  // verify found a disagreement
  kExitNoFixpoint = 4,
};

struct ClassifyArgs {
  std::filesystem::path input;
  std::filesystem::path output;
  ConnPair pair = ConnPair::eight_four();
  bool invert = false;
  std::optional<std::filesystem::path> palette;
};

struct SkeletonizeArgs {
  std::filesystem::path input;
  std::filesystem::path output;
  ConnPair pair = ConnPair::eight_four();
  bool invert = false;
  bool preserve_curve_ends = false;
  int max_iters = 10'000;
};

int cmd_classify(const ClassifyArgs& args, std::ostream& out, std::ostream& err);

/// Both Jordan pairs when `pair` is empty.
int cmd_tables(std::optional<ConnPair> pair, bool csv, std::ostream& out);

int cmd_verify(const LocalTables& tables, std::ostream& out, std::ostream& err);

int cmd_config(int mask, ConnPair pair, std::ostream& out, std::ostream& err);

int cmd_skeletonize(const SkeletonizeArgs& args, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to a subcommand.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace topo2d::cli
