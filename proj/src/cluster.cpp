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

#include "tcs/cluster.h"

#include <algorithm>
#include <stdexcept>

namespace tcs {

PauliOperator cluster_stabilizer(const Lattice& l, const Coord3& site) {
    int32_t id = l.site_id(site);
    if (id < 0) throw std::invalid_argument("cluster_stabilizer: not a qubit site");
    PauliOperator p = PauliOperator::single(site, PauliLetter::X);
    for (int k = 0; k < l.degree(id); k++) {
        p.mul(PauliOperator::single(l.site(l.neighbors(id)[static_cast<size_t>(k)]),
                                    PauliLetter::Z));
    }
    return p;
}

PauliOperator product_of_stabilizers(const Lattice& l, const std::vector<Coord3>& sites) {
    PauliOperator p;
    for (const auto& s : sites) p.mul(cluster_stabilizer(l, s));
    return p;
}

PauliOperator product_of_stabilizers_ids(const Lattice& l, const std::vector<int32_t>& site_ids) {
    PauliOperator p;
    for (int32_t id : site_ids) p.mul(cluster_stabilizer(l, l.site(id)));
    return p;
}

Tableau cluster_tableau(const Lattice& l) {
    Tableau t = Tableau::all_plus(l.num_sites());
    for (int32_t id = 0; id < l.num_sites(); id++) {
        for (int k = 0; k < l.degree(id); k++) {
            int32_t nb = l.neighbors(id)[static_cast<size_t>(k)];
            if (nb > id) t.apply_cz(id, nb);
        }
    }
    return t;
}

SparsePauli to_sparse(const Lattice& l, const PauliOperator& p) {
    SparsePauli sp;
    sp.sign = p.sign();  // throws when non-Hermitian
    for (const auto& [site, ab] : p.raw()) {
        int32_t id = l.site_id(site);
        if (id < 0) throw std::invalid_argument("operator leaves the lattice");
        PauliLetter letter =
            (ab.x && ab.z) ? PauliLetter::Y : (ab.x ? PauliLetter::X : PauliLetter::Z);
        sp.terms.emplace_back(id, letter);
    }
    std::sort(sp.terms.begin(), sp.terms.end());
    return sp;
}

int verify_eigenoperator(const Tableau& t, const Lattice& l, const PauliOperator& p) {
    if (p.is_identity()) return p.sign();
    return t.eigenvalue_of(to_sparse(l, p));
}

}  // namespace tcs
