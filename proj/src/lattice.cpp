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

#include "tcs/lattice.h"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace tcs {

using json = nlohmann::json;

DefectSpec DefectSpec::column(Parity parity, int32_t x, int32_t y, int32_t z_begin,
                              int32_t z_end) {
    DefectSpec d;
    d.parity = parity;
    for (int32_t z = z_begin; z <= z_end; z += 2) d.cells.push_back({x, y, z});
    return d;
}

std::string LatticeSpec::to_json() const {
    json j;
    j["cells"] = {cells[0], cells[1], cells[2]};
    json b;
    const char* names[3] = {"x", "y", "z"};
    for (int a = 0; a < 3; a++) {
        b[names[a]] = {to_string(boundaries.face[a][0]), to_string(boundaries.face[a][1])};
    }
    j["boundaries"] = b;
    j["defects"] = json::array();
    for (const auto& d : defects) {
        json jd;
        jd["parity"] = to_string(d.parity);
        json cs = json::array();
        for (const auto& c : d.cells) cs.push_back({c.x, c.y, c.z});
        jd["cells"] = cs;
        j["defects"].push_back(jd);
    }
    return j.dump(2) + "\n";
}

static BoundaryKind boundary_from_string(const std::string& s) {
    if (s == "primal") return BoundaryKind::primal;
    if (s == "dual") return BoundaryKind::dual;
    throw std::invalid_argument("unknown boundary kind: " + s);
}

LatticeSpec LatticeSpec::from_json(const std::string& text) {
    json j = json::parse(text);
    LatticeSpec s;
    for (int a = 0; a < 3; a++) s.cells[a] = j.at("cells").at(a).get<int32_t>();
    const char* names[3] = {"x", "y", "z"};
    for (int a = 0; a < 3; a++) {
        const auto& f = j.at("boundaries").at(names[a]);
        s.boundaries.face[a][0] = boundary_from_string(f.at(0).get<std::string>());
        s.boundaries.face[a][1] = boundary_from_string(f.at(1).get<std::string>());
    }
    if (j.contains("defects")) {
        for (const auto& jd : j.at("defects")) {
            DefectSpec d;
            std::string p = jd.at("parity").get<std::string>();
            d.parity = p == "primal" ? Parity::primal : Parity::dual;
            for (const auto& jc : jd.at("cells")) {
                d.cells.push_back(
                    {jc.at(0).get<int32_t>(), jc.at(1).get<int32_t>(), jc.at(2).get<int32_t>()});
            }
            s.defects.push_back(std::move(d));
        }
    }
    return s;
}

int64_t Lattice::grid_index(const Coord3& c) const {
    return (static_cast<int64_t>(c.x) * grid_sy_ + c.y) * grid_sz_ + c.z;
}

int32_t Lattice::site_id(const Coord3& c) const {
    if (!in_bounds(c) || c.x < 0) return -1;
    return grid_[static_cast<size_t>(grid_index(c))];
}

int32_t Lattice::cell_id(const Coord3& center) const {
    if (!in_bounds(center) || center.x < 0) return -1;
    return cell_grid_[static_cast<size_t>(grid_index(center))];
}

const Cell& Lattice::cell(const Coord3& center) const {
    int32_t id = cell_id(center);
    if (id < 0) throw std::invalid_argument("not a cell of this lattice");
    int e = even_coord_count(center);
    if (e == 0) return primal_cells_[static_cast<size_t>(id)];
    return dual_cells_[static_cast<size_t>(id)];
}

std::vector<Coord3> Lattice::cell_faces(const Coord3& center) const {
    SiteClass sc = classify_site(center);
    if (sc != SiteClass::primal_cell_center && sc != SiteClass::dual_cell_center) {
        throw std::invalid_argument("cell_faces: not a cell center");
    }
    if (cell_id(center) < 0) throw std::invalid_argument("cell_faces: cell not in lattice");
    std::vector<Coord3> out;
    for (int a = 0; a < 3; a++) {
        for (int s : {-1, +1}) {
            Coord3 f = center + unit(a, s);
            if (in_bounds(f)) out.push_back(f);
        }
    }
    return out;
}

bool Lattice::has_boundary_of(Parity p) const {
    BoundaryKind want = p == Parity::primal ? BoundaryKind::primal : BoundaryKind::dual;
    for (int a = 0; a < 3; a++) {
        for (int s = 0; s < 2; s++) {
            if (boundary(a, s) == want) return true;
        }
    }
    return false;
}

namespace {

// Cells (of the given parity) whose closed cube contains the site. A
// site is strictly inside a defect region exactly when all of these are
// in the region; cells beyond the lattice bounds count as in-region so
// that defects may run out through a bounding face.
void containing_cells(const Coord3& s, Parity p, std::vector<Coord3>& out) {
    out.clear();
    SiteClass sc = classify_site(s);
    bool primal_site = sc == SiteClass::primal_face_qubit;
    // Axes where the site coordinate is even for a primal-face site (one
    // axis) point across its own-class faces; the cell centers differ by
    // one unit along them.
    std::array<int, 3> even_axes{}, odd_axes{};
    int ne = 0, no = 0;
    for (int a = 0; a < 3; a++) {
        if ((s[a] & 1) == 0) {
            even_axes[ne++] = a;
        } else {
            odd_axes[no++] = a;
        }
    }
    if (p == Parity::primal) {
        if (primal_site) {
            // Face of two primal cells along its even axis.
            out.push_back(s + unit(even_axes[0], -1));
            out.push_back(s + unit(even_axes[0], +1));
        } else {
            // Edge of four primal cells across its two even axes.
            for (int sa : {-1, +1}) {
                for (int sb : {-1, +1}) {
                    out.push_back(s + unit(even_axes[0], sa) + unit(even_axes[1], sb));
                }
            }
        }
    } else {
        if (!primal_site) {
            out.push_back(s + unit(odd_axes[0], -1));
            out.push_back(s + unit(odd_axes[0], +1));
        } else {
            for (int sa : {-1, +1}) {
                for (int sb : {-1, +1}) {
                    out.push_back(s + unit(odd_axes[0], sa) + unit(odd_axes[1], sb));
                }
            }
        }
    }
}

// Minimum 2x2 cross-section test: every region cell must sit in some
// 2x2 block of region cells in at least one axis-plane orientation.
bool region_is_fault_tolerant(const std::set<Coord3>& region) {
    for (const auto& c : region) {
        bool ok = false;
        for (int a = 0; a < 3 && !ok; a++) {
            int u = (a + 1) % 3, v = (a + 2) % 3;
            for (int su : {-2, 2}) {
                for (int sv : {-2, 2}) {
                    if (region.count(c + unit(u, su)) && region.count(c + unit(v, sv)) &&
                        region.count(c + unit(u, su) + unit(v, sv))) {
                        ok = true;
                    }
                }
            }
        }
        if (!ok) return false;
    }
    return true;
}

bool region_is_connected(const std::set<Coord3>& region) {
    if (region.empty()) return false;
    std::set<Coord3> seen;
    std::vector<Coord3> stack{*region.begin()};
    seen.insert(*region.begin());
    while (!stack.empty()) {
        Coord3 c = stack.back();
        stack.pop_back();
        for (int a = 0; a < 3; a++) {
            for (int s : {-2, 2}) {
                Coord3 n = c + unit(a, s);
                if (region.count(n) && !seen.count(n)) {
                    seen.insert(n);
                    stack.push_back(n);
                }
            }
        }
    }
    return seen.size() == region.size();
}

}  // namespace

Lattice Lattice::build(const LatticeSpec& spec) {
    Lattice l;
    l.spec_ = spec;
    for (int a = 0; a < 3; a++) {
        if (spec.cells[a] < 1) throw std::invalid_argument("lattice needs >= 1 cell per axis");
    }
    l.lo_ = Coord3{spec.boundaries.face[0][0] == BoundaryKind::primal ? 0 : 1,
                   spec.boundaries.face[1][0] == BoundaryKind::primal ? 0 : 1,
                   spec.boundaries.face[2][0] == BoundaryKind::primal ? 0 : 1};
    auto hi_of = [&](int ax) {
        return 2 * spec.cells[ax] - (spec.boundaries.face[ax][1] == BoundaryKind::primal ? 0 : 1);
    };
    l.hi_ = Coord3{hi_of(0), hi_of(1), hi_of(2)};
    for (int a = 0; a < 3; a++) {
        if (l.hi_[a] <= l.lo_[a]) throw std::invalid_argument("degenerate lattice extent");
    }

    // Defect validation.
    std::array<std::set<Coord3>, 2> defect_cells;  // by parity
    for (const auto& d : spec.defects) {
        if (d.cells.empty()) throw std::invalid_argument("empty defect region");
        std::set<Coord3> region(d.cells.begin(), d.cells.end());
        for (const auto& c : region) {
            if (!is_cell_center(c, d.parity)) {
                throw std::invalid_argument("defect region has a cell of the wrong parity");
            }
            if (!l.in_bounds(c)) throw std::invalid_argument("defect region out of bounds");
            if (defect_cells[0].count(c) || defect_cells[1].count(c)) {
                throw std::invalid_argument("defect regions overlap");
            }
        }
        if (!region_is_connected(region)) {
            throw std::invalid_argument("defect region is not face-connected");
        }
        bool ft = region_is_fault_tolerant(region);
        l.defect_ft_.push_back(ft);
        if (!ft) l.fault_tolerant_defects_ = false;
        auto& bucket = defect_cells[d.parity == Parity::primal ? 0 : 1];
        bucket.insert(region.begin(), region.end());
    }

    // Enumerate qubit sites sorted by (z, y, x); this ordering keeps the
    // cluster's z-adjacency banded, which the correlation-surface solver
    // relies on.
    l.grid_sx_ = l.hi_.x + 1;
    l.grid_sy_ = l.hi_.y + 1;
    l.grid_sz_ = l.hi_.z + 1;
    l.grid_.assign(static_cast<size_t>(l.grid_sx_ * l.grid_sy_ * l.grid_sz_), -1);
    l.cell_grid_.assign(static_cast<size_t>(l.grid_sx_ * l.grid_sy_ * l.grid_sz_), -1);
    for (int32_t z = l.lo_.z; z <= l.hi_.z; z++) {
        for (int32_t y = l.lo_.y; y <= l.hi_.y; y++) {
            for (int32_t x = l.lo_.x; x <= l.hi_.x; x++) {
                Coord3 c{x, y, z};
                if (!is_qubit_site(c)) continue;
                l.grid_[static_cast<size_t>(l.grid_index(c))] = l.num_sites();
                l.sites_.push_back(c);
            }
        }
    }

    // CZ adjacency.
    l.adj_.assign(l.sites_.size(), {-1, -1, -1, -1});
    l.adj_deg_.assign(l.sites_.size(), 0);
    for (int32_t id = 0; id < l.num_sites(); id++) {
        const Coord3& c = l.sites_[static_cast<size_t>(id)];
        for (int a = 0; a < 3; a++) {
            for (int s : {-1, +1}) {
                int32_t nb = l.site_id(c + unit(a, s));
                if (nb >= 0) {
                    l.adj_[static_cast<size_t>(id)][l.adj_deg_[static_cast<size_t>(id)]++] = nb;
                }
            }
        }
        l.num_edges_ += l.adj_deg_[static_cast<size_t>(id)];
    }
    l.num_edges_ /= 2;

    // Z-measured (defect interior) sites.
    l.z_measured_.assign(l.sites_.size(), 0);
    std::vector<Coord3> containers;
    for (int32_t id = 0; id < l.num_sites(); id++) {
        const Coord3& c = l.sites_[static_cast<size_t>(id)];
        for (int pi = 0; pi < 2; pi++) {
            if (defect_cells[pi].empty()) continue;
            Parity p = pi == 0 ? Parity::primal : Parity::dual;
            containing_cells(c, p, containers);
            bool inside = true;
            bool any_in_region = false;
            for (const auto& cc : containers) {
                if (!l.in_bounds(cc)) continue;  // beyond a face: defect continues outward
                if (defect_cells[pi].count(cc)) {
                    any_in_region = true;
                } else {
                    inside = false;
                }
            }
            if (inside && any_in_region) {
                l.z_measured_[static_cast<size_t>(id)] = 1;
                break;
            }
        }
    }
    for (int32_t id = 0; id < l.num_sites(); id++) {
        if (l.z_measured_[static_cast<size_t>(id)]) l.z_sites_.push_back(id);
    }

    // Cells and their parity checks.
    auto build_cells = [&](Parity p, std::vector<Cell>& out) {
        const auto& in_defect = defect_cells[p == Parity::primal ? 0 : 1];
        for (int32_t z = l.lo_.z; z <= l.hi_.z; z++) {
            for (int32_t y = l.lo_.y; y <= l.hi_.y; y++) {
                for (int32_t x = l.lo_.x; x <= l.hi_.x; x++) {
                    Coord3 c{x, y, z};
                    if (!is_cell_center(c, p)) continue;
                    Cell cell;
                    cell.center = c;
                    cell.parity = p;
                    cell.in_defect = in_defect.count(c) > 0;
                    int fi = 0;
                    for (int a = 0; a < 3; a++) {
                        for (int s : {-1, +1}) {
                            cell.faces[static_cast<size_t>(fi++)] = l.site_id(c + unit(a, s));
                        }
                    }
                    // Check operator: product of cluster stabilizers of the
                    // X-measured faces. Each K contributes Z on the face's
                    // neighbors; neighbors shared by two X-faces cancel.
                    if (!cell.in_defect) {
                        std::map<int32_t, int> zcount;
                        bool any_face = false;
                        for (int32_t f : cell.faces) {
                            if (f < 0 || l.z_measured_[static_cast<size_t>(f)]) continue;
                            any_face = true;
                            for (int k = 0; k < l.degree(f); k++) {
                                zcount[l.neighbors(f)[static_cast<size_t>(k)]] ^= 1;
                            }
                        }
                        bool valid = any_face;
                        for (const auto& [site, odd] : zcount) {
                            if (!odd) continue;
                            if (l.z_measured_[static_cast<size_t>(site)]) {
                                cell.z_support.push_back(site);
                            } else {
                                valid = false;  // residual on an X-measured site
                            }
                        }
                        cell.check_valid = valid;
                        if (!valid) cell.z_support.clear();
                    }
                    l.cell_grid_[static_cast<size_t>(l.grid_index(c))] =
                        static_cast<int32_t>(out.size());
                    out.push_back(std::move(cell));
                }
            }
        }
    };
    build_cells(Parity::primal, l.primal_cells_);
    build_cells(Parity::dual, l.dual_cells_);
    return l;
}

LatticeSpec single_cell_spec() {
    LatticeSpec s;
    s.cells = {1, 1, 1};
    s.boundaries = Boundaries::all_primal();
    return s;
}

LatticeSpec memory_block_spec(int32_t d, int32_t rounds) {
    if (rounds <= 0) rounds = d;
    LatticeSpec s;
    s.cells = {d, d, rounds};
    s.boundaries = Boundaries::memory_block();
    return s;
}

}  // namespace tcs
