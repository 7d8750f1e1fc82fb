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

#include "tcs/surface.h"

#include <algorithm>
#include <stdexcept>

namespace tcs {

PauliOperator CorrelationSurface::residue(const Lattice& l, const MeasurementPattern& m) const {
    PauliOperator r;
    for (const auto& [site, ab] : op.raw()) {
        int32_t id = l.site_id(site);
        if (id >= 0 && !m.is_measured(id)) {
            r.mul(PauliOperator::single(site, ab.x ? (ab.z ? PauliLetter::Y : PauliLetter::X)
                                                   : PauliLetter::Z));
        }
    }
    return r;
}

int CorrelationSurface::predicted_sign(const std::vector<int>& outcomes) const {
    int parity = 0;
    for (int32_t id : measured_group) parity ^= outcomes[static_cast<size_t>(id)];
    return parity ? -intrinsic_sign : intrinsic_sign;
}

std::vector<int32_t> gf2_boundary(const Lattice& l, const std::vector<int32_t>& sites) {
    std::vector<uint8_t> in(static_cast<size_t>(l.num_sites()), 0);
    for (int32_t s : sites) in[static_cast<size_t>(s)] = 1;
    std::vector<int32_t> out;
    for (int32_t id = 0; id < l.num_sites(); id++) {
        int odd = 0;
        for (int k = 0; k < l.degree(id); k++) {
            odd ^= in[static_cast<size_t>(l.neighbors(id)[static_cast<size_t>(k)])];
        }
        if (odd) out.push_back(id);
    }
    return out;
}

namespace {

// One GF(2) row stored as a word-aligned window over the variable range.
struct Row {
    int32_t lead = -1;      // current leading variable, -1 when empty
    int32_t base_word = 0;  // window start, in 64-bit words of variable index
    std::vector<uint64_t> bits;
    uint8_t rhs = 0;

    bool get(int32_t var) const {
        int32_t w = (var >> 6) - base_word;
        if (w < 0 || w >= static_cast<int32_t>(bits.size())) return false;
        return (bits[static_cast<size_t>(w)] >> (var & 63)) & 1;
    }
    void set(int32_t var) {
        int32_t w = (var >> 6) - base_word;
        if (w < 0) throw std::logic_error("row window underflow");
        if (w >= static_cast<int32_t>(bits.size())) bits.resize(static_cast<size_t>(w) + 1, 0);
        bits[static_cast<size_t>(w)] ^= 1ULL << (var & 63);
    }
    void refresh_lead(int32_t nvars) {
        lead = -1;
        for (size_t w = 0; w < bits.size(); w++) {
            if (bits[w]) {
                int32_t v = (base_word + static_cast<int32_t>(w)) * 64 +
                            std::countr_zero(bits[w]);
                lead = v < nvars ? v : -1;
                return;
            }
        }
    }
    void xor_with(const Row& o) {
        int32_t lo_word = std::min(base_word, o.base_word);
        int32_t hi_word = std::max(base_word + static_cast<int32_t>(bits.size()),
                                   o.base_word + static_cast<int32_t>(o.bits.size()));
        if (lo_word != base_word || hi_word > base_word + static_cast<int32_t>(bits.size())) {
            std::vector<uint64_t> nb(static_cast<size_t>(hi_word - lo_word), 0);
            for (size_t w = 0; w < bits.size(); w++) {
                nb[static_cast<size_t>(base_word - lo_word) + w] = bits[w];
            }
            bits.swap(nb);
            base_word = lo_word;
        }
        for (size_t w = 0; w < o.bits.size(); w++) {
            bits[static_cast<size_t>(o.base_word - base_word) + w] ^= o.bits[w];
        }
        rhs ^= o.rhs;
    }
};

}  // namespace

std::optional<CorrelationSurface> solve_surface(const Lattice& l, const MeasurementPattern& m,
                                                const SurfaceRequest& req) {
    int32_t n = l.num_sites();
    // Variables: X-measured and rotated sites, in site-id order (z-sorted,
    // which keeps constraint rows banded).
    std::vector<int32_t> var_of(static_cast<size_t>(n), -1);
    std::vector<int32_t> site_of;
    for (int32_t id = 0; id < n; id++) {
        SiteBasis b = m.basis[static_cast<size_t>(id)];
        if (b == SiteBasis::x || b == SiteBasis::rotated) {
            var_of[static_cast<size_t>(id)] = static_cast<int32_t>(site_of.size());
            site_of.push_back(id);
        }
    }
    int32_t nvars = static_cast<int32_t>(site_of.size());

    std::vector<uint8_t> target(static_cast<size_t>(n), 0);
    for (int32_t id : req.target_z_sites) {
        if (m.is_measured(id)) throw std::invalid_argument("surface target on a measured site");
        target[static_cast<size_t>(id)] = 1;
    }

    // Build one row per constraint site. X-measured sites must see an
    // even number of S-neighbors; unmeasured sites must see target
    // parity. Z-measured and rotated sites are unconstrained (Z letters
    // are measurable there; rotated sites absorb any letter).
    std::vector<Row> rows;
    rows.reserve(static_cast<size_t>(n));
    for (int32_t id = 0; id < n; id++) {
        SiteBasis b = m.basis[static_cast<size_t>(id)];
        bool constrain = b == SiteBasis::x || b == SiteBasis::unmeasured;
        if (!constrain) continue;
        Row r;
        int32_t min_var = nvars;
        for (int k = 0; k < l.degree(id); k++) {
            int32_t v = var_of[static_cast<size_t>(l.neighbors(id)[static_cast<size_t>(k)])];
            if (v >= 0) min_var = std::min(min_var, v);
        }
        if (min_var == nvars) {
            // No free neighbor variables at all; the constraint is just a
            // consistency check on the target.
            if (b == SiteBasis::unmeasured && target[static_cast<size_t>(id)]) {
                return std::nullopt;
            }
            continue;
        }
        r.base_word = min_var >> 6;
        for (int k = 0; k < l.degree(id); k++) {
            int32_t v = var_of[static_cast<size_t>(l.neighbors(id)[static_cast<size_t>(k)])];
            if (v >= 0) r.set(v);
        }
        r.rhs = b == SiteBasis::unmeasured ? target[static_cast<size_t>(id)] : 0;
        r.refresh_lead(nvars);
        if (r.lead >= 0) rows.push_back(std::move(r));
    }
    // Anchor rows: s_a = 1.
    for (int32_t id : req.anchors) {
        int32_t v = var_of[static_cast<size_t>(id)];
        if (v < 0) throw std::invalid_argument("anchor site is not a free surface variable");
        Row r;
        r.base_word = v >> 6;
        r.set(v);
        r.rhs = 1;
        r.lead = v;
        rows.push_back(std::move(r));
    }

    // Banded elimination: bucket rows by leading variable, sweep left to
    // right keeping one pivot per column.
    std::vector<std::vector<size_t>> bucket(static_cast<size_t>(nvars));
    for (size_t i = 0; i < rows.size(); i++) bucket[static_cast<size_t>(rows[i].lead)].push_back(i);
    std::vector<int64_t> pivot_of(static_cast<size_t>(nvars), -1);
    for (int32_t c = 0; c < nvars; c++) {
        auto& list = bucket[static_cast<size_t>(c)];
        size_t pi = SIZE_MAX;
        for (size_t idx : list) {
            if (rows[idx].lead != c) continue;  // stale entry
            if (pi == SIZE_MAX) {
                pi = idx;
                pivot_of[static_cast<size_t>(c)] = static_cast<int64_t>(idx);
                continue;
            }
            rows[idx].xor_with(rows[pi]);
            rows[idx].refresh_lead(nvars);
            if (rows[idx].lead >= 0) {
                bucket[static_cast<size_t>(rows[idx].lead)].push_back(idx);
            } else if (rows[idx].rhs) {
                return std::nullopt;  // 0 = 1: inconsistent
            }
        }
        list.clear();
    }

    // Back-substitution with free variables set to zero.
    std::vector<uint8_t> sol(static_cast<size_t>(nvars), 0);
    for (int32_t c = nvars - 1; c >= 0; c--) {
        int64_t pi = pivot_of[static_cast<size_t>(c)];
        if (pi < 0) continue;
        const Row& r = rows[static_cast<size_t>(pi)];
        int acc = r.rhs;
        for (size_t w = 0; w < r.bits.size(); w++) {
            uint64_t word = r.bits[w];
            while (word) {
                int32_t v = (r.base_word + static_cast<int32_t>(w)) * 64 + std::countr_zero(word);
                word &= word - 1;
                if (v > c && v < nvars) acc ^= sol[static_cast<size_t>(v)];
            }
        }
        sol[static_cast<size_t>(c)] = static_cast<uint8_t>(acc);
    }

    CorrelationSurface cs;
    for (int32_t v = 0; v < nvars; v++) {
        if (sol[static_cast<size_t>(v)]) cs.sites.push_back(site_of[static_cast<size_t>(v)]);
    }
    cs.op = product_of_stabilizers_ids(l, cs.sites);
    cs.intrinsic_sign = cs.op.sign();

    // Validate and collect the measured parity group.
    for (const auto& [site, ab] : cs.op.raw()) {
        int32_t id = l.site_id(site);
        SiteBasis b = m.basis[static_cast<size_t>(id)];
        switch (b) {
            case SiteBasis::unmeasured:
                if (ab.x || target[static_cast<size_t>(id)] != 1) {
                    throw std::logic_error("surface residue disagrees with target");
                }
                break;
            case SiteBasis::x:
                if (ab.z) throw std::logic_error("surface has Z on an X-measured site");
                cs.measured_group.push_back(id);
                break;
            case SiteBasis::z:
                if (ab.x) throw std::logic_error("surface has X on a Z-measured site");
                cs.measured_group.push_back(id);
                break;
            case SiteBasis::rotated:
                cs.measured_group.push_back(id);
                break;
        }
    }
    // Every target site must actually be covered.
    for (int32_t id : req.target_z_sites) {
        if (cs.op.letter(l.site(id)) != PauliLetter::Z) {
            throw std::logic_error("surface residue misses a target site");
        }
    }
    std::sort(cs.measured_group.begin(), cs.measured_group.end());
    return cs;
}

}  // namespace tcs
