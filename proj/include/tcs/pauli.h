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

#include "tcs/coord.h"

namespace tcs {

enum class PauliLetter : uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

inline char to_char(PauliLetter l) {
    switch (l) {
        case PauliLetter::I: return 'I';
        case PauliLetter::X: return 'X';
        case PauliLetter::Z: return 'Z';
        default: return 'Y';
    }
}

// Sparse signed Pauli product over lattice sites. Stored as per-site
// (x, z) bit pairs in the convention P = i^phase * prod_site X^x Z^z,
// with the per-site factor ordered X-then-Z. phase is tracked mod 4 so
// arbitrary products stay exact; Hermitian operators reduce to a +-1
// sign via sign().
class PauliOperator {
   public:
    struct XZ {
        uint8_t x = 0;
        uint8_t z = 0;
    };

    PauliOperator() = default;

    static PauliOperator identity() { return {}; }
    static PauliOperator single(const Coord3& site, PauliLetter l);
    static PauliOperator z_string(const std::vector<Coord3>& sites);
    static PauliOperator x_string(const std::vector<Coord3>& sites);

    // In-place right multiplication: *this = *this * other.
    void mul(const PauliOperator& other);

    friend PauliOperator operator*(PauliOperator a, const PauliOperator& b) {
        a.mul(b);
        return a;
    }

    bool commutes_with(const PauliOperator& other) const;

    // Canonical letter at a site (I if absent).
    PauliLetter letter(const Coord3& site) const;

    // Sites with a non-identity letter, sorted.
    std::vector<Coord3> support() const;
    std::vector<Coord3> x_support() const;  // letters X or Y
    std::vector<Coord3> z_support() const;  // letters Z or Y

    bool is_identity() const { return letters_.empty(); }
    size_t weight() const { return letters_.size(); }

    int phase_exponent() const { return phase_; }
    bool is_hermitian() const;
    // +1 or -1; throws for non-Hermitian operators.
    int sign() const;

    bool operator==(const PauliOperator& other) const {
        return phase_ == other.phase_ && letters_ == other.letters_;
    }

    // Same letters, ignoring the phase.
    bool same_letters(const PauliOperator& other) const { return letters_ == other.letters_; }

    std::string str() const;

    const std::map<Coord3, XZ>& raw() const { return letters_; }

   private:
    std::map<Coord3, XZ> letters_;  // only non-identity entries
    int phase_ = 0;                 // power of i, mod 4

    // Number of sites with both bits set (canonical letter Y).
    int y_count() const;
};

}  // namespace tcs
