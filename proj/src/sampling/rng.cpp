// Copyright 2026 The raqprep Authors
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

#include "raqprep/sampling/rng.hpp"

#include <cmath>

namespace raqprep {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t mix_stream_key(std::uint64_t seed, std::uint64_t stream_id) {
    return splitmix64(splitmix64(seed) ^ splitmix64(stream_id ^ 0xD1B54A32D192ED03ULL));
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id), key_(mix_stream_key(seed, stream_id)), engine_(key_) {}

RngStream RngStream::substream(std::uint64_t index) const {
    RngStream child(key_, index);
    // Report the parent's identity so records stay attributable to a trial.
    child.seed_ = seed_;
    child.stream_id_ = stream_id_;
    return child;
}

double RngStream::uniform() {
    return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
}

double RngStream::normal() {
    return normal_(engine_);
}

Complex RngStream::complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re * M_SQRT1_2, im * M_SQRT1_2};
}

std::size_t RngStream::uniform_index(std::size_t n) {
    if (n == 0) {
        throw InvalidInput("uniform_index over an empty range");
    }
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
}

bool RngStream::coin() {
    return (engine_() >> 63) != 0;
}

}  // namespace raqprep
