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

#include <array>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <ostream>

namespace tcs {

// Integer lattice point in doubled coordinates: one cubic cell spans two
// units per axis, so cell centers and face/edge midpoints all land on
// integer points and primal<->dual duality is a parity shift by (1,1,1).
struct Coord3 {
    int32_t x = 0;
    int32_t y = 0;
    int32_t z = 0;

    friend auto operator<=>(const Coord3&, const Coord3&) = default;

    Coord3 operator+(const Coord3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Coord3 operator-(const Coord3& o) const { return {x - o.x, y - o.y, z - o.z}; }

    int32_t operator[](int axis) const { return axis == 0 ? x : (axis == 1 ? y : z); }

    int32_t manhattan(const Coord3& o) const {
        return std::abs(x - o.x) + std::abs(y - o.y) + std::abs(z - o.z);
    }
};

inline Coord3 unit(int axis, int sign = 1) {
    Coord3 c;
    if (axis == 0) c.x = sign;
    if (axis == 1) c.y = sign;
    if (axis == 2) c.z = sign;
    return c;
}

inline std::ostream& operator<<(std::ostream& os, const Coord3& c) {
    return os << "(" << c.x << "," << c.y << "," << c.z << ")";
}

// Classification by coordinate parities. Qubits sit on cell faces; the
// remaining two classes are the cell centers of the two interlocking
// cubic lattices.
enum class SiteClass : uint8_t {
    primal_face_qubit,   // exactly one even coordinate
    dual_face_qubit,     // exactly two even coordinates
    primal_cell_center,  // no even coordinate
    dual_cell_center,    // all coordinates even
};

inline int even_coord_count(const Coord3& c) {
    return ((c.x & 1) == 0) + ((c.y & 1) == 0) + ((c.z & 1) == 0);
}

inline SiteClass classify_site(const Coord3& c) {
    switch (even_coord_count(c)) {
        case 0: return SiteClass::primal_cell_center;
        case 1: return SiteClass::primal_face_qubit;
        case 2: return SiteClass::dual_face_qubit;
        default: return SiteClass::dual_cell_center;
    }
}

inline bool is_qubit_site(const Coord3& c) {
    int e = even_coord_count(c);
    return e == 1 || e == 2;
}

enum class Parity : uint8_t { primal, dual };

inline Parity opposite(Parity p) { return p == Parity::primal ? Parity::dual : Parity::primal; }

inline const char* to_string(Parity p) { return p == Parity::primal ? "primal" : "dual"; }

// Cell center of the given parity class?
inline bool is_cell_center(const Coord3& c, Parity p) {
    return classify_site(c) ==
           (p == Parity::primal ? SiteClass::primal_cell_center : SiteClass::dual_cell_center);
}

// Qubit class of the face qubits of a cell of parity p (a primal cell's
// six faces are primal-face qubits, and dually).
inline SiteClass face_class(Parity p) {
    return p == Parity::primal ? SiteClass::primal_face_qubit : SiteClass::dual_face_qubit;
}

struct Coord3Hash {
    size_t operator()(const Coord3& c) const {
        uint64_t h = (static_cast<uint64_t>(static_cast<uint32_t>(c.x)) << 42) ^
                     (static_cast<uint64_t>(static_cast<uint32_t>(c.y)) << 21) ^
                     static_cast<uint64_t>(static_cast<uint32_t>(c.z));
        h ^= h >> 33;
        h *= 0xff51afd7ed558ccdULL;
        h ^= h >> 33;
        return static_cast<size_t>(h);
    }
};

}  // namespace tcs
