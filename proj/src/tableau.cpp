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

#include "tcs/tableau.h"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace tcs {

Tableau::Tableau(int32_t n, bool plus_states) : n_(n) {
    if (n < 1) throw std::invalid_argument("tableau needs >= 1 qubit");
    words_ = (static_cast<size_t>(n) + 63) / 64;
    bits_.assign(static_cast<size_t>(2 * n) * 2 * words_, 0);
    phase_.assign(static_cast<size_t>(2 * n), 0);
    for (int32_t i = 0; i < n; i++) {
        if (plus_states) {
            // stabilizers X_i, destabilizers Z_i
            set_bit(row_x(static_cast<size_t>(n_ + i)), i, true);
            set_bit(row_z(static_cast<size_t>(i)), i, true);
        } else {
            set_bit(row_z(static_cast<size_t>(n_ + i)), i, true);
            set_bit(row_x(static_cast<size_t>(i)), i, true);
        }
    }
}

void Tableau::apply_cz(int32_t a, int32_t b) {
    if (a == b) throw std::invalid_argument("cz needs distinct qubits");
    for (size_t r = 0; r < static_cast<size_t>(2 * n_); r++) {
        bool xa = get_bit(row_x(r), a), xb = get_bit(row_x(r), b);
        bool za = get_bit(row_z(r), a), zb = get_bit(row_z(r), b);
        if (xa && xb && (za ^ zb)) phase_[r] ^= 1;
        set_bit(row_z(r), a, za ^ xb);
        set_bit(row_z(r), b, zb ^ xa);
    }
}

void Tableau::apply_x(int32_t q) {
    // X anticommutes with Z and Y letters.
    for (size_t r = 0; r < static_cast<size_t>(2 * n_); r++) {
        if (get_bit(row_z(r), q)) phase_[r] ^= 1;
    }
}

void Tableau::apply_z(int32_t q) {
    for (size_t r = 0; r < static_cast<size_t>(2 * n_); r++) {
        if (get_bit(row_x(r), q)) phase_[r] ^= 1;
    }
}

void Tableau::apply_h(int32_t q) {
    for (size_t r = 0; r < static_cast<size_t>(2 * n_); r++) {
        bool x = get_bit(row_x(r), q), z = get_bit(row_z(r), q);
        if (x && z) phase_[r] ^= 1;
        set_bit(row_x(r), q, z);
        set_bit(row_z(r), q, x);
    }
}

namespace {

// Phase bookkeeping for multiplying rows of Hermitian Paulis: counts the
// power of i produced per site when the left letter multiplies the right
// letter, bit-parallel over 64 sites.
inline void phase_words(uint64_t x1, uint64_t z1, uint64_t x2, uint64_t z2, int& plus,
                        int& minus) {
    // +i cases: X*Y, Y*Z, Z*X
    uint64_t p = (x1 & ~z1 & x2 & z2) | (x1 & z1 & ~x2 & z2) | (~x1 & z1 & x2 & ~z2);
    // -i cases: X*Z, Y*X, Z*Y
    uint64_t m = (x1 & ~z1 & ~x2 & z2) | (x1 & z1 & x2 & ~z2) | (~x1 & z1 & x2 & z2);
    plus += std::popcount(p);
    minus += std::popcount(m);
}

}  // namespace

void Tableau::rowsum(size_t h, size_t i) {
    int plus = 0, minus = 0;
    uint64_t* hx = row_x(h);
    uint64_t* hz = row_z(h);
    const uint64_t* ix = row_x(i);
    const uint64_t* iz = row_z(i);
    for (size_t w = 0; w < words_; w++) {
        phase_words(ix[w], iz[w], hx[w], hz[w], plus, minus);
        hx[w] ^= ix[w];
        hz[w] ^= iz[w];
    }
    int total = 2 * phase_[h] + 2 * phase_[i] + plus - minus;
    total &= 3;
    // Products of commuting Hermitian rows are Hermitian: total is 0 or 2.
    phase_[h] = static_cast<uint8_t>(total >> 1);
}

void Tableau::rowsum_into(uint64_t* sx, uint64_t* sz, int& sphase2, size_t i) const {
    int plus = 0, minus = 0;
    const uint64_t* ix = row_x(i);
    const uint64_t* iz = row_z(i);
    for (size_t w = 0; w < words_; w++) {
        phase_words(ix[w], iz[w], sx[w], sz[w], plus, minus);
        sx[w] ^= ix[w];
        sz[w] ^= iz[w];
    }
    sphase2 = (sphase2 + 2 * phase_[i] + plus - minus) & 3;
}

MeasureResult Tableau::measure(int32_t q, MeasureBasis basis, Rng& rng,
                               std::optional<int> forced) {
    uint8_t px = basis != MeasureBasis::Z;
    uint8_t pz = basis != MeasureBasis::X;
    // Y = i X Z needs no extra phase handling below: the stabilizer row
    // written on a random outcome stores canonical letters directly.
    size_t p = 0;
    bool found = false;
    for (size_t r = static_cast<size_t>(n_); r < static_cast<size_t>(2 * n_); r++) {
        if (anticommutes_single(r, q, px, pz)) {
            p = r;
            found = true;
            break;
        }
    }
    if (found) {
        int outcome = forced ? (*forced & 1) : static_cast<int>(rng.next_bool());
        for (size_t r = 0; r < static_cast<size_t>(2 * n_); r++) {
            if (r != p && anticommutes_single(r, q, px, pz)) rowsum(r, p);
        }
        // Destabilizer partner takes the old stabilizer row.
        size_t d = p - static_cast<size_t>(n_);
        std::copy(row_x(p), row_x(p) + 2 * words_, row_x(d));
        phase_[d] = phase_[p];
        std::fill(row_x(p), row_x(p) + 2 * words_, 0ULL);
        set_bit(row_x(p), q, px);
        set_bit(row_z(p), q, pz);
        phase_[p] = static_cast<uint8_t>(outcome);
        return {outcome, false};
    }
    // Deterministic: accumulate the stabilizer rows whose destabilizer
    // partners anticommute with the measured operator.
    std::vector<uint64_t> scratch(2 * words_, 0);
    int sphase2 = 0;
    for (size_t d = 0; d < static_cast<size_t>(n_); d++) {
        if (anticommutes_single(d, q, px, pz)) {
            rowsum_into(scratch.data(), scratch.data() + words_, sphase2, d + static_cast<size_t>(n_));
        }
    }
    // scratch now holds +-(measured operator); for Y the canonical letter
    // pair (x=z=1) matches, so the sign is just the accumulated phase.
    int outcome = (sphase2 >> 1) & 1;
    if (forced && *forced != outcome) {
        throw std::runtime_error("forced outcome contradicts a deterministic measurement");
    }
    return {outcome, true};
}

int Tableau::eigenvalue_of(const SparsePauli& p) const {
    // Bit masks of the operator.
    std::vector<uint64_t> opx(words_, 0), opz(words_, 0);
    for (const auto& [q, l] : p.terms) {
        if (q < 0 || q >= n_) throw std::invalid_argument("pauli index out of range");
        uint64_t m = 1ULL << (q & 63);
        if (l == PauliLetter::X || l == PauliLetter::Y) opx[static_cast<size_t>(q) >> 6] |= m;
        if (l == PauliLetter::Z || l == PauliLetter::Y) opz[static_cast<size_t>(q) >> 6] |= m;
    }
    auto anticommutes_row = [&](size_t r) {
        uint64_t acc = 0;
        const uint64_t* rx = row_x(r);
        const uint64_t* rz = row_z(r);
        for (size_t w = 0; w < words_; w++) acc ^= (rx[w] & opz[w]) ^ (rz[w] & opx[w]);
        return (std::popcount(acc) & 1) != 0;
    };
    for (size_t r = static_cast<size_t>(n_); r < static_cast<size_t>(2 * n_); r++) {
        if (anticommutes_row(r)) return 0;
    }
    std::vector<uint64_t> scratch(2 * words_, 0);
    int sphase2 = 0;
    for (size_t d = 0; d < static_cast<size_t>(n_); d++) {
        uint64_t acc = 0;
        const uint64_t* rx = row_x(d);
        const uint64_t* rz = row_z(d);
        for (size_t w = 0; w < words_; w++) acc ^= (rx[w] & opz[w]) ^ (rz[w] & opx[w]);
        if (std::popcount(acc) & 1) {
            rowsum_into(scratch.data(), scratch.data() + words_, sphase2, d + static_cast<size_t>(n_));
        }
    }
    for (size_t w = 0; w < words_; w++) {
        if (scratch[w] != opx[w] || scratch[words_ + w] != opz[w]) {
            throw std::logic_error("eigenvalue_of: group reduction mismatch");
        }
    }
    int eig = ((sphase2 >> 1) & 1) ? -1 : +1;
    return p.sign * eig;
}

std::string Tableau::stabilizer_str(int32_t i) const {
    std::ostringstream os;
    size_t r = static_cast<size_t>(n_ + i);
    os << (phase_[r] ? '-' : '+');
    for (int32_t q = 0; q < n_; q++) {
        bool x = get_bit(row_x(r), q), z = get_bit(row_z(r), q);
        os << (x && z ? 'Y' : (x ? 'X' : (z ? 'Z' : 'I')));
    }
    return os.str();
}

}  // namespace tcs
