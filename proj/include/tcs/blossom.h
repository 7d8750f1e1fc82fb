// Copyright 2026 tcslab contributors
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
#include <vector>

namespace tcs {

// Exact minimum-weight perfect matching on a complete graph with
// nonnegative integer weights, via the primal-dual blossom algorithm
// (O(V^3)-ish; exact for all sizes). Returns the partner of each vertex.
// Throws when n is odd.
//
// Weights enter as int64 but must be small enough that n * max_w fits
// comfortably; the decoder's weights are path lengths, far below that.
std::vector<int32_t> min_weight_perfect_matching(int32_t n, const std::vector<int64_t>& w);

inline int64_t& matrix_at(std::vector<int64_t>& w, int32_t n, int32_t i, int32_t j) {
    return w[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)];
}

}  // namespace tcs
