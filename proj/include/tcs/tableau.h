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
#include <string>
#include <vector>

#include "tcs/pauli.h"
#include "tcs/rng.h"

namespace tcs {

// Hermitian Pauli product over qubit indices, used at the tableau
// boundary. sign is +1 or -1; letters are canonical I/X/Y/Z.
struct SparsePauli {
    std::vector<std::pair<int32_t, PauliLetter>> terms;  // sorted by index, no I entries
    int sign = +1;

    static SparsePauli single(int32_t q, PauliLetter l) { return {{{q, l}}, +1}; }
};

enum class MeasureBasis : uint8_t { X, Y, Z };

struct MeasureResult {
    int outcome = 0;  // 0 = +1 eigenstate, 1 = -1 eigenstate
    bool deterministic = false;
};

// Binary-symplectic stabilizer tableau with destabilizer rows, in the
// standard destabilizer/stabilizer layout: row i < n is the destabilizer
// paired with stabilizer row n+i. Rows are bit-packed; phases are exact.
class Tableau {
   public:
    explicit Tableau(int32_t n, bool plus_states = true);

    static Tableau all_plus(int32_t n) { return Tableau(n, true); }
    static Tableau all_zero(int32_t n) { return Tableau(n, false); }

    int32_t n() const { return n_; }

    void apply_cz(int32_t a, int32_t b);
    void apply_x(int32_t q);  // Pauli frame injections for fault tests
    void apply_z(int32_t q);
    void apply_h(int32_t q);

    // Single-qubit measurement. Random outcomes draw from rng unless
    // forced; forcing a deterministic measurement to the wrong value
    // throws (the branch does not exist).
    MeasureResult measure(int32_t q, MeasureBasis basis, Rng& rng,
                          std::optional<int> forced = std::nullopt);

    // Group membership with sign: +1 or -1 when the state is an
    // eigenstate of p, 0 when p anticommutes with some stabilizer.
    // Never modifies the tableau.
    int eigenvalue_of(const SparsePauli& p) const;

    std::string stabilizer_str(int32_t i) const;  // row n+i, for debugging

   private:
    int32_t n_;
    size_t words_;                 // words per n-bit half-row
    std::vector<uint64_t> bits_;   // 2n rows, each 2*words_ (x then z)
    std::vector<uint8_t> phase_;   // r bit per row

    uint64_t* row_x(size_t r) { return bits_.data() + r * 2 * words_; }
    uint64_t* row_z(size_t r) { return bits_.data() + r * 2 * words_ + words_; }
    const uint64_t* row_x(size_t r) const { return bits_.data() + r * 2 * words_; }
    const uint64_t* row_z(size_t r) const { return bits_.data() + r * 2 * words_ + words_; }

    bool get_bit(const uint64_t* w, int32_t q) const {
        return (w[static_cast<size_t>(q) >> 6] >> (q & 63)) & 1;
    }
    void set_bit(uint64_t* w, int32_t q, bool v) {
        uint64_t m = 1ULL << (q & 63);
        if (v) {
            w[static_cast<size_t>(q) >> 6] |= m;
        } else {
            w[static_cast<size_t>(q) >> 6] &= ~m;
        }
    }

    // row h <- row i * row h, with exact phase accumulation.
    void rowsum(size_t h, size_t i);
    // Same accumulation into an external scratch row.
    void rowsum_into(uint64_t* sx, uint64_t* sz, int& sphase2, size_t i) const;

    bool anticommutes_single(size_t row, int32_t q, uint8_t px, uint8_t pz) const {
        return (get_bit(row_x(row), q) & pz) ^ (get_bit(row_z(row), q) & px);
    }
};

}  // namespace tcs
