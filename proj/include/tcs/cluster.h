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

#include <vector>

#include "tcs/lattice.h"
#include "tcs/pauli.h"
#include "tcs/tableau.h"

namespace tcs {

// Cluster stabilizer of a qubit site: X there, Z on every CZ neighbor.
PauliOperator cluster_stabilizer(const Lattice& l, const Coord3& site);

// GF(2) product of the cluster stabilizers of a set of sites, with exact
// sign. Order-independent. For a set S the X part is exactly S and the
// Z part is the set of sites with an odd number of neighbors in S, so
// products over closed surfaces cancel to pure X.
PauliOperator product_of_stabilizers(const Lattice& l, const std::vector<Coord3>& sites);
PauliOperator product_of_stabilizers_ids(const Lattice& l, const std::vector<int32_t>& site_ids);

// Freshly entangled cluster state of the whole lattice: every site in
// |+>, one CZ per adjacency edge.
Tableau cluster_tableau(const Lattice& l);

// Site-id form of a symbolic operator, for tableau queries. Throws for
// non-Hermitian operators or operators leaving the lattice.
SparsePauli to_sparse(const Lattice& l, const PauliOperator& p);

// Group-membership test with sign: +1 / -1 when the tableau state is an
// eigenstate of p, 0 otherwise.
int verify_eigenoperator(const Tableau& t, const Lattice& l, const PauliOperator& p);

}  // namespace tcs
