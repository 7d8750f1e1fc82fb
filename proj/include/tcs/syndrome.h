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

#include <map>
#include <string>
#include <vector>

#include "tcs/lattice.h"
#include "tcs/noise.h"

namespace tcs {

// The odd-parity cells of one parity class.
struct Syndrome {
    Parity parity_class = Parity::primal;
    std::vector<int32_t> odd_cells;  // indices into lattice.cells(parity_class), sorted

    bool empty() const { return odd_cells.empty(); }

    // Symmetric difference, for the linearity checks.
    Syndrome symmetric_difference(const Syndrome& other) const;

    std::map<int32_t, int> counts_by_slice(const Lattice& l) const;  // z -> odd count

    std::string to_text(const Lattice& l) const;
    static Syndrome from_text(const Lattice& l, const std::string& text);

    bool operator==(const Syndrome& other) const = default;
};

// Parity of every valid cell check of the class: a cell is odd when an
// odd number of its X-measured face outcomes plus the Z outcomes in its
// check residual are flipped.
Syndrome extract_syndrome(const Lattice& l, const FlipPattern& f, Parity parity_class);

enum class EndpointKind : uint8_t {
    interior,
    same_parity_boundary,      // chain endpoint invisible
    opposite_parity_boundary,  // endpoint flips a boundary half-cell
};

struct EndpointReport {
    Coord3 site;  // the end flip of the chain
    EndpointKind kind = EndpointKind::interior;
    bool visible = false;  // an odd cell marks this endpoint
};

// Diagnostic for fixture patterns that decompose into disjoint chains of
// same-class flips; rejects anything else. Reports how each chain end
// terminates.
std::vector<EndpointReport> boundary_visibility(const Lattice& l, const FlipPattern& f,
                                                Parity parity_class);

}  // namespace tcs
