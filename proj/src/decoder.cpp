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

#include "tcs/decoder.h"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <stdexcept>

#include "tcs/blossom.h"
#include "tcs/rng.h"

namespace tcs {

namespace {

BoundaryKind kind_of(Parity p) {
    return p == Parity::primal ? BoundaryKind::primal : BoundaryKind::dual;
}

// Cells passed through from a cell center to a bounding face plane.
int32_t cells_to_face(const Coord3& center, int axis, int32_t plane) {
    return (std::abs(center[axis] - plane) - 1) / 2;
}

}  // namespace

MatchGraph build_match_graph(const Lattice& l, const Syndrome& s) {
    MatchGraph g;
    g.parity = s.parity_class;
    const auto& cells = l.cells(s.parity_class);

    // Same-parity bounding faces, in x-,x+,y-,y+,z-,z+ preference order.
    std::vector<std::pair<int, int>> faces;
    for (int axis = 0; axis < 3; axis++) {
        for (int side = 0; side < 2; side++) {
            if (l.boundary(axis, side) == kind_of(s.parity_class)) faces.emplace_back(axis, side);
        }
    }

    for (int32_t ci : s.odd_cells) {
        MatchVertex v;
        v.kind = MatchVertex::Kind::cell;
        v.cell_index = ci;
        v.pos = cells[static_cast<size_t>(ci)].center;
        g.vertices.push_back(v);
    }
    int32_t n_cells = static_cast<int32_t>(g.vertices.size());
    if (!faces.empty()) {
        for (int32_t i = 0; i < n_cells; i++) {
            const Coord3& c = g.vertices[static_cast<size_t>(i)].pos;
            int best_axis = -1, best_side = -1;
            int32_t best = INT32_MAX;
            for (auto [axis, side] : faces) {
                int32_t d = cells_to_face(c, axis, l.face_plane(axis, side));
                if (d < best) {
                    best = d;
                    best_axis = axis;
                    best_side = side;
                }
            }
            MatchVertex b;
            b.kind = MatchVertex::Kind::boundary;
            b.cell_index = i;  // partner cell vertex
            b.boundary_axis = best_axis;
            b.boundary_side = best_side;
            b.pos = c;
            b.pos = Coord3{best_axis == 0 ? l.face_plane(0, best_side) : c.x,
                           best_axis == 1 ? l.face_plane(1, best_side) : c.y,
                           best_axis == 2 ? l.face_plane(2, best_side) : c.z};
            g.vertices.push_back(b);
        }
    }

    int32_t n = g.size();
    g.weights.assign(static_cast<size_t>(n) * n, -1);
    for (int32_t i = 0; i < n; i++) {
        for (int32_t j = i + 1; j < n; j++) {
            const MatchVertex& a = g.vertices[static_cast<size_t>(i)];
            const MatchVertex& b = g.vertices[static_cast<size_t>(j)];
            int64_t w = -1;
            if (a.kind == MatchVertex::Kind::cell && b.kind == MatchVertex::Kind::cell) {
                w = a.pos.manhattan(b.pos) / 2;
            } else if (a.kind == MatchVertex::Kind::boundary &&
                       b.kind == MatchVertex::Kind::boundary) {
                w = 0;
            } else {
                const MatchVertex& cell = a.kind == MatchVertex::Kind::cell ? a : b;
                const MatchVertex& bnd = a.kind == MatchVertex::Kind::cell ? b : a;
                int32_t ci = a.kind == MatchVertex::Kind::cell ? i : j;
                if (bnd.cell_index == ci) {
                    w = cells_to_face(cell.pos, bnd.boundary_axis,
                                      l.face_plane(bnd.boundary_axis, bnd.boundary_side)) +
                        1;
                }
            }
            matrix_at(g.weights, n, i, j) = w;
            matrix_at(g.weights, n, j, i) = w;
        }
    }
    return g;
}

Matching min_weight_matching(const MatchGraph& g) {
    Matching m;
    int32_t n = g.size();
    if (n == 0) return m;
    if (n % 2 != 0) throw std::invalid_argument("matching graph has odd vertex count");
    // Primary weights scaled up; a fixed hash of the endpoint coordinates
    // breaks ties deterministically. Forbidden pairs get a weight no
    // optimal matching can touch.
    const int64_t scale = int64_t{1} << 32;
    int64_t w_max = 0;
    for (int64_t w : g.weights) w_max = std::max(w_max, w);
    int64_t forbidden = (w_max + 1) * n;
    auto coord_hash = [](const Coord3& a, const Coord3& b) {
        uint64_t s = derive_seed(0x7c0ffee5ULL, static_cast<uint32_t>(a.x) * 1024ULL + a.y,
                                 static_cast<uint32_t>(a.z) * 4096ULL + static_cast<uint32_t>(b.x),
                                 static_cast<uint32_t>(b.y) * 1024ULL + b.z);
        return static_cast<int64_t>(s & 0x7fffffffULL);
    };
    std::vector<int64_t> w(static_cast<size_t>(n) * n, 0);
    for (int32_t i = 0; i < n; i++) {
        for (int32_t j = 0; j < n; j++) {
            if (i == j) continue;
            int64_t base = g.weight(i, j);
            if (base < 0) base = forbidden;
            const Coord3& a = g.vertices[static_cast<size_t>(std::min(i, j))].pos;
            const Coord3& b = g.vertices[static_cast<size_t>(std::max(i, j))].pos;
            matrix_at(w, n, i, j) = base * scale + coord_hash(a, b);
        }
    }
    auto mate = min_weight_perfect_matching(n, w);
    for (int32_t i = 0; i < n; i++) {
        int32_t j = mate[static_cast<size_t>(i)];
        if (j > i) {
            if (g.weight(i, j) < 0) throw std::logic_error("matcher used a forbidden edge");
            m.pairs.emplace_back(i, j);
            m.total_weight += g.weight(i, j);
        }
    }
    return m;
}

namespace {

// Flip the shared face between two adjacent same-parity cells.
void flip_between(const Lattice& l, const Coord3& a, const Coord3& b, FlipPattern& f) {
    Coord3 sum = a + b;
    Coord3 mid{sum.x / 2, sum.y / 2, sum.z / 2};
    int32_t id = l.site_id(mid);
    if (id < 0 || l.is_z_measured(id)) throw std::logic_error("correction path crosses a defect");
    f.flips[static_cast<size_t>(id)] ^= 1;
}

bool cell_usable(const Lattice& l, const Coord3& center, Parity p) {
    int32_t id = l.cell_id(center);
    if (id < 0) return false;
    return !l.cells(p)[static_cast<size_t>(id)].in_defect;
}

// Steps between adjacent cells in fixed axis order; falls back to BFS in
// the cell graph when the staircase runs into a defect.
void path_between_cells(const Lattice& l, Parity p, const Coord3& from, const Coord3& to,
                        FlipPattern& f) {
    auto step_ok = [&](const Coord3& a, const Coord3& b) {
        Coord3 sum = a + b;
        Coord3 mid{sum.x / 2, sum.y / 2, sum.z / 2};
        int32_t id = l.site_id(mid);
        return id >= 0 && !l.is_z_measured(id) && cell_usable(l, b, p);
    };
    // Staircase attempt: x, then y, then z.
    Coord3 cur = from;
    std::vector<Coord3> trail{cur};
    bool blocked = false;
    for (int axis = 0; axis < 3 && !blocked; axis++) {
        while (cur[axis] != to[axis]) {
            int dir = to[axis] > cur[axis] ? 2 : -2;
            Coord3 next = cur;
            if (axis == 0) next.x += dir;
            if (axis == 1) next.y += dir;
            if (axis == 2) next.z += dir;
            if (!step_ok(cur, next)) {
                blocked = true;
                break;
            }
            trail.push_back(next);
            cur = next;
        }
    }
    if (!blocked) {
        for (size_t i = 0; i + 1 < trail.size(); i++) flip_between(l, trail[i], trail[i + 1], f);
        return;
    }
    // BFS detour around defects, deterministic neighbor order.
    std::deque<Coord3> queue{from};
    std::map<Coord3, Coord3> parent;
    parent[from] = from;
    bool found = false;
    while (!queue.empty() && !found) {
        Coord3 c = queue.front();
        queue.pop_front();
        for (int axis = 0; axis < 3 && !found; axis++) {
            for (int dir : {-2, 2}) {
                Coord3 nb = c;
                if (axis == 0) nb.x += dir;
                if (axis == 1) nb.y += dir;
                if (axis == 2) nb.z += dir;
                if (parent.count(nb) || !step_ok(c, nb)) continue;
                parent[nb] = c;
                if (nb == to) {
                    found = true;
                    break;
                }
                queue.push_back(nb);
            }
        }
    }
    if (!found) throw std::runtime_error("no correction path between matched cells");
    for (Coord3 c = to; c != from; c = parent[c]) flip_between(l, parent[c], c, f);
}

// Straight path from a cell out through its boundary face, including the
// face qubit in the bounding plane when it exists.
void path_to_boundary(const Lattice& l, Parity p, const Coord3& from, int axis, int side,
                      FlipPattern& f) {
    int32_t plane = l.face_plane(axis, side);
    int dir = side == 0 ? -1 : 1;
    Coord3 cur = from;
    while (true) {
        Coord3 face = cur + unit(axis, dir);
        int32_t id = l.site_id(face);
        if (id >= 0 && l.is_z_measured(id)) {
            throw std::runtime_error("boundary correction path crosses a defect");
        }
        if (id >= 0) f.flips[static_cast<size_t>(id)] ^= 1;
        if (face[axis] == plane || id < 0) break;
        cur = face + unit(axis, dir);
    }
}

}  // namespace

Correction correction_from_matching(const Lattice& l, const MatchGraph& g, const Matching& m) {
    Correction corr;
    corr.pattern = FlipPattern::empty(l);
    for (auto [i, j] : m.pairs) {
        const MatchVertex& a = g.vertices[static_cast<size_t>(i)];
        const MatchVertex& b = g.vertices[static_cast<size_t>(j)];
        if (a.kind == MatchVertex::Kind::boundary && b.kind == MatchVertex::Kind::boundary) {
            continue;  // nothing to flip
        }
        if (a.kind == MatchVertex::Kind::cell && b.kind == MatchVertex::Kind::cell) {
            path_between_cells(l, g.parity, a.pos, b.pos, corr.pattern);
        } else {
            const MatchVertex& cell = a.kind == MatchVertex::Kind::cell ? a : b;
            const MatchVertex& bnd = a.kind == MatchVertex::Kind::cell ? b : a;
            path_to_boundary(l, g.parity, cell.pos, bnd.boundary_axis, bnd.boundary_side,
                             corr.pattern);
        }
    }
    return corr;
}

Correction decode(const Lattice& l, const Syndrome& s) {
    MatchGraph g = build_match_graph(l, s);
    Matching m = min_weight_matching(g);
    return correction_from_matching(l, g, m);
}

StreamDecodeResult decode_stream(const Lattice& l, const Syndrome& s, int32_t t, int32_t t_c) {
    MatchGraph g = build_match_graph(l, s);
    Matching m = min_weight_matching(g);
    Matching committed;
    StreamDecodeResult out;
    for (auto [i, j] : m.pairs) {
        int32_t za = g.vertices[static_cast<size_t>(i)].pos.z;
        int32_t zb = g.vertices[static_cast<size_t>(j)].pos.z;
        if (std::min(za, zb) < t - t_c) {
            committed.pairs.emplace_back(i, j);
            committed.total_weight += g.weight(i, j);
        } else {
            out.pending_pairs.emplace_back(i, j);
        }
    }
    out.committed = correction_from_matching(l, g, committed);
    return out;
}

}  // namespace tcs
