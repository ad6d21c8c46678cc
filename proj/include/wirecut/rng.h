// Copyright 2026 The wirecut Authors
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

#include <cstdint>
#include <initializer_list>
#include <random>

namespace wirecut {

/// SplitMix64 finalizer; used to derive independent stream seeds.
constexpr uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Seed for the stream identified by `tags` under `master`. Pure function of its inputs,
/// so work items can be scheduled in any order.
inline uint64_t derive_seed(uint64_t master, std::initializer_list<uint64_t> tags) {
    uint64_t h = splitmix64(master);
    for (uint64_t t : tags) {
        h = splitmix64(h ^ splitmix64(t + 0x632BE59BD9B4E019ull));
    }
    return h;
}

/// std::mt19937_64 has a fully specified output sequence, unlike the std distributions,
/// so uniforms are built from raw draws here.
class Rng {
  public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next() { return engine_(); }
    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  private:
    std::mt19937_64 engine_;
};

}  // namespace wirecut
