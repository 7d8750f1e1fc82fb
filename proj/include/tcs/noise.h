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
#include <string>
#include <vector>

#include "tcs/lattice.h"
#include "tcs/rng.h"

namespace tcs {

enum class NoiseKind : uint8_t { phenomenological, circuit_level };

struct ErrorModel {
    NoiseKind kind = NoiseKind::phenomenological;
    double p = 0.0;
    uint64_t seed = 0;
    // Circuit-level only: when true, each CZ draws two independent fault
    // locations instead of one. The per-location threshold differs by
    // roughly a factor of two between the two accountings, so the
    // experiment reports both.
    bool cz_as_two_locations = false;
};

// Measurement-record flips. X-basis flips (Z errors before measurement or
// M_X errors, indistinguishable) live in `flips`; outcome flips of
// Z-measured defect-interior qubits live in `z_flips` and feed the
// five-sided checks on defect walls.
struct FlipPattern {
    std::vector<uint8_t> flips;    // per site id; only X-measured sites may be set
    std::vector<uint8_t> z_flips;  // per site id; only Z-measured sites may be set

    static FlipPattern empty(const Lattice& l);

    void xor_with(const FlipPattern& other);
    bool operator==(const FlipPattern& other) const = default;

    int64_t count() const;

    // Sorted site-coordinate text form.
    std::string to_text(const Lattice& l) const;
    static FlipPattern from_text(const Lattice& l, const std::string& text);
};

// Global CZ schedule: six rounds, one per edge direction; an edge along
// axis a whose lower endpoint has even a-coordinate fires in round 2a,
// otherwise in round 2a+1. Each site takes part in exactly one CZ per
// active round, so the rounds are physically parallel steps.
int cz_round(const Lattice& l, int32_t site_a, int32_t site_b);

// Neighbors of `site` in schedule order with their rounds.
std::vector<std::pair<int, int32_t>> site_cz_order(const Lattice& l, int32_t site);

// Residual record flips of a single X fault on `site` after the first
// `completed_czs` of its CZ gates have fired. Conjugating X through each
// still-pending CZ deposits Z on that neighbor; the X surviving to the
// measurement is harmless for X-measured sites but flips a Z-measured
// (defect-interior) outcome.
FlipPattern reduce_x_error(const Lattice& l, int32_t site, int completed_czs);

// Independent flip of each measured site with probability p (X-measured
// into flips, Z-measured into z_flips).
FlipPattern sample_phenomenological(const Lattice& l, double p, Rng& rng);

// Faults with probability p per location: one per site initialization,
// one (or two, see ErrorModel) per CZ drawing a uniform nontrivial
// two-qubit Pauli propagated through the pending schedule, and one per
// measurement. Everything is reduced to record flips mod 2.
FlipPattern sample_circuit_level(const Lattice& l, double p, Rng& rng,
                                 bool cz_as_two_locations = false);

FlipPattern sample(const Lattice& l, const ErrorModel& m, Rng& rng);

}  // namespace tcs
