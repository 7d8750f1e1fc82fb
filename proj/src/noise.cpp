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

#include "tcs/noise.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tcs {

FlipPattern FlipPattern::empty(const Lattice& l) {
    FlipPattern f;
    f.flips.assign(static_cast<size_t>(l.num_sites()), 0);
    f.z_flips.assign(static_cast<size_t>(l.num_sites()), 0);
    return f;
}

void FlipPattern::xor_with(const FlipPattern& other) {
    if (flips.size() != other.flips.size()) throw std::invalid_argument("pattern size mismatch");
    for (size_t i = 0; i < flips.size(); i++) {
        flips[i] ^= other.flips[i];
        z_flips[i] ^= other.z_flips[i];
    }
}

int64_t FlipPattern::count() const {
    int64_t n = 0;
    for (auto v : flips) n += v;
    for (auto v : z_flips) n += v;
    return n;
}

std::string FlipPattern::to_text(const Lattice& l) const {
    // Site ids are ordered by (z,y,x); emit in plain coordinate order.
    std::vector<Coord3> a, b;
    for (size_t i = 0; i < flips.size(); i++) {
        if (flips[i]) a.push_back(l.site(static_cast<int32_t>(i)));
        if (z_flips[i]) b.push_back(l.site(static_cast<int32_t>(i)));
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::ostringstream os;
    os << "flips\n";
    for (const auto& c : a) os << c.x << " " << c.y << " " << c.z << "\n";
    if (!b.empty()) {
        os << "zflips\n";
        for (const auto& c : b) os << c.x << " " << c.y << " " << c.z << "\n";
    }
    return os.str();
}

FlipPattern FlipPattern::from_text(const Lattice& l, const std::string& text) {
    FlipPattern f = FlipPattern::empty(l);
    std::istringstream is(text);
    std::string line;
    int section = 0;  // 0 = expect header, 1 = flips, 2 = zflips
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "flips") {
            section = 1;
            continue;
        }
        if (first == "zflips") {
            section = 2;
            continue;
        }
        if (section == 0) throw std::invalid_argument("flip pattern: missing header");
        Coord3 c;
        c.x = std::stoi(first);
        if (!(ls >> c.y >> c.z)) throw std::invalid_argument("flip pattern: bad site line");
        int32_t id = l.site_id(c);
        if (id < 0) throw std::invalid_argument("flip pattern: unknown site");
        if (section == 1) {
            if (l.is_z_measured(id)) throw std::invalid_argument("flip on a Z-measured site");
            f.flips[static_cast<size_t>(id)] ^= 1;
        } else {
            if (!l.is_z_measured(id)) throw std::invalid_argument("z-flip on an X-measured site");
            f.z_flips[static_cast<size_t>(id)] ^= 1;
        }
    }
    return f;
}

int cz_round(const Lattice& l, int32_t site_a, int32_t site_b) {
    const Coord3& a = l.site(site_a);
    const Coord3& b = l.site(site_b);
    Coord3 d = b - a;
    int axis = d.x != 0 ? 0 : (d.y != 0 ? 1 : 2);
    int32_t low = std::min(a[axis], b[axis]);
    return 2 * axis + (low & 1);
}

std::vector<std::pair<int, int32_t>> site_cz_order(const Lattice& l, int32_t site) {
    std::vector<std::pair<int, int32_t>> out;
    for (int k = 0; k < l.degree(site); k++) {
        int32_t nb = l.neighbors(site)[static_cast<size_t>(k)];
        out.emplace_back(cz_round(l, site, nb), nb);
    }
    std::sort(out.begin(), out.end());
    return out;
}

FlipPattern reduce_x_error(const Lattice& l, int32_t site, int completed_czs) {
    if (site < 0 || site >= l.num_sites()) throw std::invalid_argument("bad site");
    FlipPattern f = FlipPattern::empty(l);
    auto order = site_cz_order(l, site);
    int deg = static_cast<int>(order.size());
    if (completed_czs < 0 || completed_czs > deg) {
        throw std::invalid_argument("completed_czs out of range");
    }
    for (int k = completed_czs; k < deg; k++) {
        int32_t nb = order[static_cast<size_t>(k)].second;
        if (l.is_z_measured(nb)) continue;  // Z error on a Z-measured site: no record effect
        f.flips[static_cast<size_t>(nb)] ^= 1;
    }
    // The surviving X flips a Z-basis outcome but not an X-basis one.
    if (l.is_z_measured(site)) f.z_flips[static_cast<size_t>(site)] ^= 1;
    return f;
}

FlipPattern sample_phenomenological(const Lattice& l, double p, Rng& rng) {
    FlipPattern f = FlipPattern::empty(l);
    for (int32_t id = 0; id < l.num_sites(); id++) {
        if (!rng.bernoulli(p)) continue;
        if (l.is_z_measured(id)) {
            f.z_flips[static_cast<size_t>(id)] ^= 1;
        } else {
            f.flips[static_cast<size_t>(id)] ^= 1;
        }
    }
    return f;
}

namespace {

// Apply one two-qubit Pauli fault (1..15, bits: x_a, z_a, x_b, z_b) that
// occurred right after round `round` on edge (a, b).
void apply_cz_fault(const Lattice& l, int32_t a, int32_t b, int round, int pauli,
                    FlipPattern& f) {
    int xa = pauli & 1, za = (pauli >> 1) & 1;
    int xb = (pauli >> 2) & 1, zb = (pauli >> 3) & 1;
    auto deposit_z = [&](int32_t q) {
        if (!l.is_z_measured(q)) f.flips[static_cast<size_t>(q)] ^= 1;
    };
    auto propagate_x = [&](int32_t q) {
        // Z on each neighbor whose CZ fires in a later round; the X
        // itself only matters for Z-measured sites.
        for (int k = 0; k < l.degree(q); k++) {
            int32_t nb = l.neighbors(q)[static_cast<size_t>(k)];
            if (cz_round(l, q, nb) > round) deposit_z(nb);
        }
        if (l.is_z_measured(q)) f.z_flips[static_cast<size_t>(q)] ^= 1;
    };
    if (za) deposit_z(a);
    if (zb) deposit_z(b);
    if (xa) propagate_x(a);
    if (xb) propagate_x(b);
}

}  // namespace

FlipPattern sample_circuit_level(const Lattice& l, double p, Rng& rng,
                                 bool cz_as_two_locations) {
    FlipPattern f = FlipPattern::empty(l);
    // Initialization errors: the prepared |+> flips to |->, i.e. a Z at
    // time zero. Visible only on X-measured sites.
    for (int32_t id = 0; id < l.num_sites(); id++) {
        if (rng.bernoulli(p) && !l.is_z_measured(id)) {
            f.flips[static_cast<size_t>(id)] ^= 1;
        }
    }
    // CZ faults, one edge at a time (edges visited from the lower id).
    int draws = cz_as_two_locations ? 2 : 1;
    for (int32_t id = 0; id < l.num_sites(); id++) {
        for (int k = 0; k < l.degree(id); k++) {
            int32_t nb = l.neighbors(id)[static_cast<size_t>(k)];
            if (nb < id) continue;
            int round = cz_round(l, id, nb);
            for (int dr = 0; dr < draws; dr++) {
                if (!rng.bernoulli(p)) continue;
                int pauli = 1 + static_cast<int>(rng.next_below(15));
                apply_cz_fault(l, id, nb, round, pauli, f);
            }
        }
    }
    // Measurement flips.
    for (int32_t id = 0; id < l.num_sites(); id++) {
        if (!rng.bernoulli(p)) continue;
        if (l.is_z_measured(id)) {
            f.z_flips[static_cast<size_t>(id)] ^= 1;
        } else {
            f.flips[static_cast<size_t>(id)] ^= 1;
        }
    }
    return f;
}

FlipPattern sample(const Lattice& l, const ErrorModel& m, Rng& rng) {
    if (m.p < 0.0 || m.p > 1.0) throw std::invalid_argument("p must be in [0,1]");
    if (m.kind == NoiseKind::phenomenological) return sample_phenomenological(l, m.p, rng);
    return sample_circuit_level(l, m.p, rng, m.cz_as_two_locations);
}

}  // namespace tcs
