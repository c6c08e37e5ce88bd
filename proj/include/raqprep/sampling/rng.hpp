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

#pragma once

#include <cstdint>
#include <random>

#include "raqprep/linalg/types.hpp"

namespace raqprep {

std::uint64_t splitmix64(std::uint64_t x);

/// Key of stream `stream_id` under master `seed`. Fixed forever: changing it
/// changes every recorded experiment.
std::uint64_t mix_stream_key(std::uint64_t seed, std::uint64_t stream_id);

/// Reproducible pseudo-random stream identified by (seed, stream_id).
///
/// Streams are move-only so that exactly one consumer owns each sequence.
class RngStream {
   public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id);

    RngStream(const RngStream &) = delete;
    RngStream &operator=(const RngStream &) = delete;
    RngStream(RngStream &&) = default;
    RngStream &operator=(RngStream &&) = default;

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

    /// Independent child stream; a function of (seed, stream_id, index) only,
    /// never of how much of this stream has been consumed.
    RngStream substream(std::uint64_t index) const;

    std::mt19937_64 &engine() { return engine_; }

    double uniform();
    double normal();
    /// Standard complex Gaussian: real and imaginary parts N(0, 1/2).
    Complex complex_normal();
    std::size_t uniform_index(std::size_t n);
    bool coin();

   private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::uint64_t key_;
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace raqprep
