// Copyright 2026 The dpgeom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DPGEOM_COMMON_RANDOM_H_
#define DPGEOM_COMMON_RANDOM_H_

#include <bit>
#include <cstdint>
#include <random>
#include "absl/strings/string_view.h"

namespace dpgeom {

// All randomized operations take an explicit generator of this type. Callers
// own it; nothing in the library keeps generator state.
using Rng = std::mt19937_64;

// Platform-stable 64-bit hash used to derive per-row seeds. FNV-1a over a
// canonical byte encoding, finished with the SplitMix64 mixer. Unlike
// std::hash the value is fixed across compilers and runs.
class StableHasher {
 public:
  StableHasher& Add(std::uint64_t value) {
    for (int i = 0; i < 8; ++i) {
      AddByte(static_cast<unsigned char>(value >> (8 * i)));
    }
    return *this;
  }

  StableHasher& Add(double value) {
    // +0.0 and -0.0 hash identically.
    if (value == 0.0) value = 0.0;
    return Add(std::bit_cast<std::uint64_t>(value));
  }

  // Strings are length-prefixed so ("ab","c") and ("a","bc") differ.
  StableHasher& Add(absl::string_view text) {
    Add(static_cast<std::uint64_t>(text.size()));
    for (char c : text) AddByte(static_cast<unsigned char>(c));
    return *this;
  }

  std::uint64_t Finish() const {
    std::uint64_t z = state_ + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  void AddByte(unsigned char byte) {
    state_ ^= byte;
    state_ *= 0x100000001b3ULL;
  }

  std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

}  // namespace dpgeom

#endif  // DPGEOM_COMMON_RANDOM_H_
