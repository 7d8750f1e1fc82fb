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

#include <optional>
#include <vector>

#include "tcs/cluster.h"
#include "tcs/lattice.h"
#include "tcs/pattern.h"

namespace tcs {

// A correlation surface: a product of cluster stabilizers whose letters
// match the measurement pattern wherever it is measured (X letters only
// on X or rotated sites, Z letters only on Z-measured sites) and whose
// unmeasured residue is a prescribed set of Z letters (the logical
// rings/chains it connects).
struct CorrelationSurface {
    std::vector<int32_t> sites;   // the stabilizer set S, sorted by id
    PauliOperator op;             // exact product over S
    // Measured sites carrying a letter of op; the parity of their
    // outcomes fixes the sign of the unmeasured residue.
    std::vector<int32_t> measured_group;
    int intrinsic_sign = +1;      // sign of op itself

    // The unmeasured Z-residue as an operator.
    PauliOperator residue(const Lattice& l, const MeasurementPattern& m) const;

    // Sign the residue takes given a full outcome record (indexed by site).
    int predicted_sign(const std::vector<int>& outcomes) const;
};

struct SurfaceRequest {
    // Desired unmeasured Z letters, by site id.
    std::vector<int32_t> target_z_sites;
    // Sites forced into S; used to anchor closed surfaces, which solve a
    // homogeneous system.
    std::vector<int32_t> anchors;
};

// Solves for S over GF(2): unknowns are X/rotated-measured sites, with
// one parity constraint per X-measured site (no Z letter may appear
// there) and per unmeasured site (the Z letter must match the target).
// The site ordering is z-sorted, so the system is banded and elimination
// stays linear in practice. Returns nullopt when no such surface exists.
std::optional<CorrelationSurface> solve_surface(const Lattice& l, const MeasurementPattern& m,
                                                const SurfaceRequest& req);

// Boundary of a candidate set: sites with an odd number of neighbors in
// it. Used by the deformation-freedom checks.
std::vector<int32_t> gf2_boundary(const Lattice& l, const std::vector<int32_t>& sites);

}  // namespace tcs
