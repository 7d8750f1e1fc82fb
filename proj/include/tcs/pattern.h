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
#include <map>
#include <string>
#include <vector>

#include "tcs/lattice.h"

namespace tcs {

// Per-site measurement assignment of one computation step. X everywhere
// is the default for cluster consumption; defect interiors measure Z; a
// single injection site may measure in a Z-rotated X basis (rotated(0)
// is plain X, rotated(pi/2) is Y). Unmeasured sites carry the logical
// state past the pattern.
enum class SiteBasis : uint8_t { unmeasured, x, z, rotated };

struct MeasurementPattern {
    std::vector<SiteBasis> basis;  // per site id
    double theta = 0.0;            // rotation angle of `rotated` sites
    // Named site groups whose outcome parities define byproduct bits.
    std::map<std::string, std::vector<int32_t>> parity_groups;

    static MeasurementPattern unmeasured(const Lattice& l) {
        MeasurementPattern p;
        p.basis.assign(static_cast<size_t>(l.num_sites()), SiteBasis::unmeasured);
        return p;
    }

    // Default consumption pattern: X everywhere, Z on defect interiors.
    static MeasurementPattern full(const Lattice& l) {
        MeasurementPattern p = unmeasured(l);
        for (int32_t id = 0; id < l.num_sites(); id++) {
            p.basis[static_cast<size_t>(id)] = l.is_z_measured(id) ? SiteBasis::z : SiteBasis::x;
        }
        return p;
    }

    // Restrict to a z-window: sites outside [z_lo, z_hi] become unmeasured.
    MeasurementPattern windowed(const Lattice& l, int32_t z_lo, int32_t z_hi) const {
        MeasurementPattern p = *this;
        for (int32_t id = 0; id < l.num_sites(); id++) {
            int32_t z = l.site(id).z;
            if (z < z_lo || z > z_hi) p.basis[static_cast<size_t>(id)] = SiteBasis::unmeasured;
        }
        return p;
    }

    bool is_measured(int32_t id) const {
        return basis[static_cast<size_t>(id)] != SiteBasis::unmeasured;
    }

    int64_t parity_of(const std::string& group, const std::vector<int>& outcomes) const {
        int64_t s = 0;
        for (int32_t id : parity_groups.at(group)) s ^= outcomes[static_cast<size_t>(id)];
        return s;
    }
};

}  // namespace tcs
