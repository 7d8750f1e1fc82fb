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
#include <optional>
#include <vector>

#include "tcs/lattice.h"
#include "tcs/noise.h"
#include "tcs/syndrome.h"

namespace tcs {

// Matching graph built from a syndrome. Each odd cell contributes a cell
// vertex and, when the lattice has a boundary of the same parity, a
// partner vertex at the nearest point of the nearest such boundary.
// Cell-cell edges weigh the Manhattan distance in cell units; a cell's
// edge to its own boundary vertex weighs the number of cells passed
// through plus one; boundary-boundary edges weigh zero. Cells connect
// only to their own boundary vertex.
struct MatchVertex {
    enum class Kind : uint8_t { cell, boundary } kind = Kind::cell;
    int32_t cell_index = -1;  // odd cell (index into lattice cells list)
    Coord3 pos;               // cell center, or projected boundary point
    int boundary_axis = -1;   // boundary vertices: which face
    int boundary_side = -1;
};

struct MatchGraph {
    Parity parity = Parity::primal;
    std::vector<MatchVertex> vertices;
    // Dense weight matrix; -1 marks absent edges (cell to a foreign
    // boundary vertex), which the matcher must never use.
    std::vector<int64_t> weights;

    int32_t size() const { return static_cast<int32_t>(vertices.size()); }
    int64_t weight(int32_t i, int32_t j) const {
        return weights[static_cast<size_t>(i) * vertices.size() + static_cast<size_t>(j)];
    }
};

MatchGraph build_match_graph(const Lattice& l, const Syndrome& s);

struct Matching {
    std::vector<std::pair<int32_t, int32_t>> pairs;  // vertex index pairs, i < j
    int64_t total_weight = 0;
};

// Exact minimum-weight perfect matching of the graph. Ties between
// equal-weight matchings are broken by a fixed hash perturbation of the
// vertex coordinates, so fixtures are reproducible.
Matching min_weight_matching(const MatchGraph& g);

struct Correction {
    FlipPattern pattern;
};

// Record bit-flips realizing a matching: staircase paths (x, then y,
// then z) between matched cells, straight paths out of the lattice for
// boundary pairs, detours found by BFS in the cell graph when a defect
// blocks the straight route.
Correction correction_from_matching(const Lattice& l, const MatchGraph& g, const Matching& m);

// Convenience: extract, match, correct.
Correction decode(const Lattice& l, const Syndrome& s);

struct StreamDecodeResult {
    Correction committed;
    std::vector<std::pair<int32_t, int32_t>> pending_pairs;  // matched but not committed
};

// Streaming window: only matched pairs with at least one vertex at
// simulated time earlier than t - t_c are committed; pairs entirely
// inside the window stay pending. Times are doubled z coordinates.
StreamDecodeResult decode_stream(const Lattice& l, const Syndrome& s, int32_t t, int32_t t_c);

}  // namespace tcs
