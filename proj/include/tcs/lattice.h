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
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tcs/coord.h"

namespace tcs {

// Label of one bounding plane of the lattice. A primal boundary plane
// lies on primal cell faces (even doubled coordinate), so primal cells
// next to it are whole and dual cells are halved; a dual boundary plane
// (odd doubled coordinate) bisects primal cells, leaving five-sided
// primal cells against it.
enum class BoundaryKind : uint8_t { primal, dual };

inline const char* to_string(BoundaryKind b) {
    return b == BoundaryKind::primal ? "primal" : "dual";
}

struct Boundaries {
    // Indexed [axis][side], side 0 = low face, 1 = high face.
    std::array<std::array<BoundaryKind, 2>, 3> face;

    static Boundaries all(BoundaryKind k) {
        Boundaries b;
        for (auto& ax : b.face) ax = {k, k};
        return b;
    }
    static Boundaries all_primal() { return all(BoundaryKind::primal); }

    // Memory-block convention: primal along x, dual along y and z.
    static Boundaries memory_block() {
        Boundaries b = all(BoundaryKind::dual);
        b.face[0] = {BoundaryKind::primal, BoundaryKind::primal};
        return b;
    }
};

// A defect: a face-connected region of same-parity cells whose strictly
// interior qubits get measured in the Z basis, punching a hole that can
// carry logical degrees of freedom.
struct DefectSpec {
    Parity parity = Parity::primal;
    std::vector<Coord3> cells;  // cell centers, doubled coordinates

    // Convenience builders (doubled coordinates).
    static DefectSpec column(Parity parity, int32_t x, int32_t y, int32_t z_begin, int32_t z_end);
};

struct LatticeSpec {
    // Number of primal cells per axis. Together with the boundary kinds
    // this fixes the doubled-coordinate bounds: a primal low face sits at
    // 0 and high face at 2n; a dual face moves one unit inward, bisecting
    // the outermost primal cells.
    std::array<int32_t, 3> cells = {1, 1, 1};
    Boundaries boundaries = Boundaries::all_primal();
    std::vector<DefectSpec> defects;

    std::string to_json() const;
    static LatticeSpec from_json(const std::string& text);
};

struct Cell {
    Coord3 center;
    Parity parity = Parity::primal;
    // Site ids of the present face qubits in -x,+x,-y,+y,-z,+z order;
    // -1 where the face qubit does not exist (outside the lattice).
    std::array<int32_t, 6> faces = {-1, -1, -1, -1, -1, -1};
    bool in_defect = false;
    // The parity check for this cell is the product of the cluster
    // stabilizers of its X-measured faces. Besides those X outcomes it
    // may involve Z outcomes of defect-interior qubits (five-sided cells
    // against a defect wall). check_valid is false when that residual
    // would fall on sites that are not measured in Z, or when the cell is
    // inside a defect; such cells contribute no check.
    bool check_valid = false;
    std::vector<int32_t> z_support;  // Z-measured sites entering the check
};

class Lattice {
   public:
    static Lattice build(const LatticeSpec& spec);

    const LatticeSpec& spec() const { return spec_; }
    // Inclusive doubled-coordinate bounds.
    const Coord3& lo() const { return lo_; }
    const Coord3& hi() const { return hi_; }
    bool in_bounds(const Coord3& c) const {
        return c.x >= lo_.x && c.x <= hi_.x && c.y >= lo_.y && c.y <= hi_.y && c.z >= lo_.z &&
               c.z <= hi_.z;
    }

    // Qubit sites, sorted by (z, y, x); index into this list is the site id.
    const std::vector<Coord3>& sites() const { return sites_; }
    int32_t num_sites() const { return static_cast<int32_t>(sites_.size()); }
    const Coord3& site(int32_t id) const { return sites_[static_cast<size_t>(id)]; }
    // -1 if not a qubit site of this lattice.
    int32_t site_id(const Coord3& c) const;
    SiteClass site_class(int32_t id) const { return classify_site(site(id)); }

    // CZ adjacency: the distance-1 qubit neighbors. Every edge joins a
    // primal-face qubit to a dual-face qubit.
    int degree(int32_t id) const { return adj_deg_[static_cast<size_t>(id)]; }
    const std::array<int32_t, 4>& neighbors(int32_t id) const {
        return adj_[static_cast<size_t>(id)];
    }
    int64_t num_cz_edges() const { return num_edges_; }

    // Defect-interior sites are measured in Z instead of X.
    bool is_z_measured(int32_t id) const { return z_measured_[static_cast<size_t>(id)] != 0; }
    const std::vector<int32_t>& z_measured_sites() const { return z_sites_; }

    const std::vector<Cell>& cells(Parity p) const {
        return p == Parity::primal ? primal_cells_ : dual_cells_;
    }
    // -1 if center is not a cell of this lattice (wrong class or out of bounds).
    int32_t cell_id(const Coord3& center) const;
    const Cell& cell(const Coord3& center) const;

    // Present face-qubit coordinates of a cell, -x,+x,-y,+y,-z,+z order.
    // Rejects non-cell-center input.
    std::vector<Coord3> cell_faces(const Coord3& center) const;

    // True when every defect has cross-section at least 2x2 cells.
    // Narrow defects still build but are flagged, since they expose
    // interior errors that no five-sided check can see.
    bool fault_tolerant_defects() const { return fault_tolerant_defects_; }
    const std::vector<bool>& defect_fault_tolerant() const { return defect_ft_; }

    // True if the given face of the lattice matches the parity class
    // (primal boundaries terminate primal error chains invisibly, etc.).
    BoundaryKind boundary(int axis, int side) const {
        return spec_.boundaries.face[static_cast<size_t>(axis)][static_cast<size_t>(side)];
    }
    bool has_boundary_of(Parity p) const;

    // Doubled-coordinate plane position of a bounding face.
    int32_t face_plane(int axis, int side) const {
        return side == 0 ? lo_[axis] : hi_[axis];
    }

   private:
    LatticeSpec spec_;
    Coord3 lo_, hi_;
    std::vector<Coord3> sites_;
    std::vector<int32_t> grid_;  // (x,y,z) -> site id or -1
    int64_t grid_sx_ = 0, grid_sy_ = 0, grid_sz_ = 0;
    std::vector<std::array<int32_t, 4>> adj_;
    std::vector<uint8_t> adj_deg_;
    int64_t num_edges_ = 0;
    std::vector<uint8_t> z_measured_;
    std::vector<int32_t> z_sites_;
    std::vector<Cell> primal_cells_;
    std::vector<Cell> dual_cells_;
    std::vector<int32_t> cell_grid_;  // shared center -> cell id (parity implied by center)
    bool fault_tolerant_defects_ = true;
    std::vector<bool> defect_ft_;

    int64_t grid_index(const Coord3& c) const;
};

// Single cell with all its edge qubits: the 18-qubit building block.
LatticeSpec single_cell_spec();

// Memory block used by the threshold experiment: d x d x rounds primal
// cells, primal boundaries along x, dual boundaries along y and z. The
// shortest undetectable primal chain crosses the d+1 faces between the
// two primal boundaries.
LatticeSpec memory_block_spec(int32_t d, int32_t rounds = 0);

}  // namespace tcs
