// Copyright 2026 The remote-vm Authors
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
#include <random>
#include <utility>
#include <vector>

namespace rvm {

/// SplitMix64 finalizer; used to derive independent stream seeds.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seed of stream `index` under `base`. Stable across platforms and independent
/// of the order streams are consumed in.
inline std::uint64_t split_seed(std::uint64_t base, std::uint64_t index) {
    return mix64(mix64(base) ^ mix64(index + 0x632BE59BD9B4E019ULL));
}

/// mt19937_64 with hand-rolled bounded and real draws: the standard library
/// distributions are implementation-defined, which would break cross-platform
/// reproducibility of generated topologies.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(mix64(seed)) {
    }

    std::uint64_t next() {
        return engine_();
    }
    /// Uniform in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        while (true) {
            std::uint64_t r = engine_();
            if (r >= threshold) {
                return r % bound;
            }
        }
    }
    /// Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }
    bool bernoulli(double p) {
        return uniform() < p;
    }
    template <typename T>
    void shuffle(std::vector<T> &items) {
        for (std::size_t i = items.size(); i > 1; i--) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

   private:
    std::mt19937_64 engine_;
};

}  // namespace rvm
