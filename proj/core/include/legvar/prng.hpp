/*
 * Copyright 2026 The legvar authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>

namespace legvar {

/// Deterministic 64-bit mix generator (splitmix64).
///
/// All randomized samplers in the library draw from this generator so that a
/// seed fully determines every report byte. The exact algorithm is written
/// out in docs/prng.md; any reimplementation must reproduce the same stream.
class Prng {
public:
    explicit Prng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish value in [lo, hi] by modulo reduction (documented choice:
    /// reproducibility across implementations beats the negligible bias).
    int64_t next_in_range(int64_t lo, int64_t hi) {
        uint64_t span = static_cast<uint64_t>(hi - lo + 1);
        return lo + static_cast<int64_t>(next() % span);
    }

    /// Nonzero value in [lo, hi] (requires lo <= 0 <= hi, lo < hi).
    int64_t next_nonzero(int64_t lo, int64_t hi) {
        for (;;) {
            int64_t v = next_in_range(lo, hi);
            if (v != 0) return v;
        }
    }

    /// Child generator for an independent, reproducible substream.
    Prng fork(uint64_t salt) {
        return Prng(next() ^ (0xD1B54A32D192ED03ULL * salt + 0x8CB92BA72F3D8DD7ULL));
    }

private:
    uint64_t state_;
};

} // namespace legvar
