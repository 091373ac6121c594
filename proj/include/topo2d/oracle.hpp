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

#include "topo2d/grid.hpp"

// Whole-image topology by direct component counting. Every call relabels the
// image from scratch with its own flood fill; nothing here goes through the
// local tables or the grid union-find, so it can serve as ground truth.
namespace topo2d::oracle {

/// Number of n-components of the black pixels.
int count_black_components(const BinaryImage& img, Connectivity n);

/// Number of n_bar-components of the white pixels, counted on a canvas
/// padded by `padding` white rings so that the infinite background is
/// exactly one component and each hole counts separately.
int count_white_components(const BinaryImage& img, Connectivity n_bar, int padding = 1);

/// Whether deleting p leaves both component counts unchanged.
/// Throws std::invalid_argument if p is not black.
bool is_simple_global(const BinaryImage& img, Point p, ConnPair pair);

}  // namespace topo2d::oracle
