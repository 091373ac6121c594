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

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "row_kernels_impl.hpp"
#include "topo2d/kernels/isa.hpp"

namespace topo2d::kernels {

namespace {

constexpr RowKernels kScalar{&scalar::config_row, &scalar::classify_row};
#if defined(TOPO2D_HAVE_AVX2)
constexpr RowKernels kAvx2{&avx2::config_row, &avx2::classify_row};
#endif
#if defined(TOPO2D_HAVE_NEON)
constexpr RowKernels kNeon{&neon::config_row, &neon::classify_row};
#endif

bool cpu_has_avx2() {
#if defined(TOPO2D_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  static const bool has = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") != 0;
  }();
  return has;
#else
  return false;
#endif
}

Isa detect_best() {
  if (const char* forced = std::getenv("TOPO2D_ISA")) {
    if (auto isa = parse_isa(forced); isa && isa_available(*isa)) return *isa;
  }
  if (isa_available(Isa::Avx2)) return Isa::Avx2;
  if (isa_available(Isa::Neon)) return Isa::Neon;
  return Isa::Scalar;
}

}  // namespace

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
      return cpu_has_avx2();
    case Isa::Neon:
#if defined(TOPO2D_HAVE_NEON)
      return true;  // baseline on AArch64
#else
      return false;
#endif
  }
  return false;
}

Isa best_isa() {
  static const Isa best = detect_best();
  return best;
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
    if (isa_available(isa)) out.push_back(isa);
  }
  return out;
}

const RowKernels& row_kernels(Isa isa) {
  if (!isa_available(isa)) {
    throw std::invalid_argument("row kernels not available on this CPU: " +
                                std::string(isa_name(isa)));
  }
  switch (isa) {
#if defined(TOPO2D_HAVE_AVX2)
    case Isa::Avx2:
      return kAvx2;
#endif
#if defined(TOPO2D_HAVE_NEON)
    case Isa::Neon:
      return kNeon;
#endif
    default:
      return kScalar;
  }
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
    case Isa::Neon:
      return "neon";
  }
  return "unknown";
}

std::optional<Isa> parse_isa(std::string_view name) {
  for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
    if (name == isa_name(isa)) return isa;
  }
  return std::nullopt;
}

}  // namespace topo2d::kernels
