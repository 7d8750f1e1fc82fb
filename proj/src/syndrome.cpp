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

#include "tcs/syndrome.h"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace tcs {

Syndrome Syndrome::symmetric_difference(const Syndrome& other) const {
    if (parity_class != other.parity_class) throw std::invalid_argument("parity mismatch");
    Syndrome out;
    out.parity_class = parity_class;
    std::set_symmetric_difference(odd_cells.begin(), odd_cells.end(), other.odd_cells.begin(),
                                  other.odd_cells.end(), std::back_inserter(out.odd_cells));
    return out;
}

std::map<int32_t, int> Syndrome::counts_by_slice(const Lattice& l) const {
    std::map<int32_t, int> out;
    const auto& cells = l.cells(parity_class);
    for (int32_t id : odd_cells) out[cells[static_cast<size_t>(id)].center.z]++;
    return out;
}

std::string Syndrome::to_text(const Lattice& l) const {
    std::ostringstream os;
    os << "syndrome " << to_string(parity_class) << "\n";
    const auto& cells = l.cells(parity_class);
    std::vector<Coord3> cs;
    for (int32_t id : odd_cells) cs.push_back(cells[static_cast<size_t>(id)].center);
    std::sort(cs.begin(), cs.end());
    for (const auto& c : cs) os << c.x << " " << c.y << " " << c.z << "\n";
    return os.str();
}

Syndrome Syndrome::from_text(const Lattice& l, const std::string& text) {
    std::istringstream is(text);
    std::string word;
    if (!(is >> word) || word != "syndrome") {
        throw std::invalid_argument("syndrome: missing header");
    }
    std::string parity;
    is >> parity;
    Syndrome s;
    s.parity_class = parity == "primal" ? Parity::primal : Parity::dual;
    Coord3 c;
    while (is >> c.x >> c.y >> c.z) {
        int32_t id = l.cell_id(c);
        if (id < 0 || !is_cell_center(c, s.parity_class)) {
            throw std::invalid_argument("syndrome: unknown cell");
        }
        s.odd_cells.push_back(id);
    }
    std::sort(s.odd_cells.begin(), s.odd_cells.end());
    return s;
}

Syndrome extract_syndrome(const Lattice& l, const FlipPattern& f, Parity parity_class) {
    Syndrome s;
    s.parity_class = parity_class;
    const auto& cells = l.cells(parity_class);
    for (size_t ci = 0; ci < cells.size(); ci++) {
        const Cell& c = cells[ci];
        if (!c.check_valid) continue;
        int parity = 0;
        for (int32_t face : c.faces) {
            if (face >= 0 && !l.is_z_measured(face)) parity ^= f.flips[static_cast<size_t>(face)];
        }
        for (int32_t zs : c.z_support) parity ^= f.z_flips[static_cast<size_t>(zs)];
        if (parity) s.odd_cells.push_back(static_cast<int32_t>(ci));
    }
    return s;
}

namespace {

// Axis along which the containing cells of a class-face qubit lie: the
// single even axis of a primal-face site, the single odd axis of a
// dual-face site.
int containing_axis(const Coord3& s, Parity p) {
    for (int a = 0; a < 3; a++) {
        bool even = (s[a] & 1) == 0;
        if ((p == Parity::primal) == even) return a;
    }
    throw std::logic_error("site is not a face qubit of this class");
}

}  // namespace

std::vector<EndpointReport> boundary_visibility(const Lattice& l, const FlipPattern& f,
                                                Parity parity_class) {
    SiteClass want = face_class(parity_class);
    std::vector<int32_t> flip_sites;
    for (int32_t id = 0; id < l.num_sites(); id++) {
        if (f.flips[static_cast<size_t>(id)] && l.site_class(id) == want) flip_sites.push_back(id);
    }
    // Chain adjacency: two flips sharing a cell of the class sit at
    // distance two with a class cell center as midpoint.
    std::map<int32_t, std::vector<int32_t>> adj;
    for (size_t i = 0; i < flip_sites.size(); i++) {
        for (size_t j = i + 1; j < flip_sites.size(); j++) {
            Coord3 a = l.site(flip_sites[i]);
            Coord3 b = l.site(flip_sites[j]);
            if (a.manhattan(b) != 2) continue;
            Coord3 sum = a + b;
            if ((sum.x | sum.y | sum.z) & 1) continue;
            Coord3 mid{sum.x / 2, sum.y / 2, sum.z / 2};
            if (!is_cell_center(mid, parity_class) || !l.in_bounds(mid)) continue;
            adj[flip_sites[i]].push_back(flip_sites[j]);
            adj[flip_sites[j]].push_back(flip_sites[i]);
        }
    }
    for (const auto& [site, nbrs] : adj) {
        if (nbrs.size() > 2) throw std::invalid_argument("pattern is not a disjoint chain set");
    }
    // Walk components, verifying each is a simple path.
    Syndrome syn = extract_syndrome(l, f, parity_class);
    auto cell_is_odd = [&](const Coord3& center) {
        int32_t id = l.cell_id(center);
        if (id < 0) return false;
        return std::binary_search(syn.odd_cells.begin(), syn.odd_cells.end(), id);
    };
    std::vector<EndpointReport> reports;
    std::map<int32_t, bool> seen;
    auto classify_end = [&](int32_t end_site, const Coord3& outward_cell) {
        EndpointReport r;
        r.site = l.site(end_site);
        if (!l.in_bounds(outward_cell)) {
            // The end flip lies in a bounding plane of its own parity.
            r.kind = EndpointKind::same_parity_boundary;
            r.visible = false;
            return r;
        }
        bool halved = false;
        for (int a = 0; a < 3; a++) {
            if (outward_cell[a] == l.lo()[a] || outward_cell[a] == l.hi()[a]) halved = true;
        }
        r.kind = halved ? EndpointKind::opposite_parity_boundary : EndpointKind::interior;
        r.visible = cell_is_odd(outward_cell);
        return r;
    };
    for (int32_t start : flip_sites) {
        if (seen[start]) continue;
        // Find an end of this component.
        int32_t end = start;
        int32_t prev = -1;
        for (size_t steps = 0; steps <= flip_sites.size(); steps++) {
            const auto& nb = adj[end];
            int32_t next = -1;
            for (int32_t cand : nb) {
                if (cand != prev) next = cand;
            }
            if (nb.size() <= 1 || next < 0) break;
            if (static_cast<size_t>(steps) == flip_sites.size()) {
                throw std::invalid_argument("pattern contains a cycle");
            }
            prev = end;
            end = next;
        }
        // Walk from `end` marking the path and find the far end.
        std::vector<int32_t> path{end};
        seen[end] = true;
        prev = -1;
        int32_t cur = end;
        while (true) {
            int32_t next = -1;
            for (int32_t cand : adj[cur]) {
                if (cand != prev) next = cand;
            }
            if (next < 0) break;
            if (seen[next]) throw std::invalid_argument("pattern contains a cycle");
            seen[next] = true;
            path.push_back(next);
            prev = cur;
            cur = next;
        }
        // Classify the two ends (a singleton reports both of its sides).
        auto ends_of = [&](int32_t s_id, int32_t toward_id) {
            Coord3 s = l.site(s_id);
            int axis = containing_axis(s, parity_class);
            Coord3 c_minus = s + unit(axis, -1);
            Coord3 c_plus = s + unit(axis, +1);
            if (toward_id < 0) {
                reports.push_back(classify_end(s_id, c_minus));
                reports.push_back(classify_end(s_id, c_plus));
                return;
            }
            Coord3 t = l.site(toward_id);
            Coord3 sum = s + t;
            Coord3 shared{sum.x / 2, sum.y / 2, sum.z / 2};
            reports.push_back(classify_end(s_id, shared == c_minus ? c_plus : c_minus));
        };
        if (path.size() == 1) {
            ends_of(path[0], -1);
        } else {
            ends_of(path.front(), path[1]);
            ends_of(path.back(), path[path.size() - 2]);
        }
    }
    return reports;
}

}  // namespace tcs
