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
#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "tcs/rng.h"
#include "tcs/tableau.h"

namespace tcs {

// Exact state-vector backend for the small non-Clifford checks (state
// injection with arbitrary rotation angles). Hard cap of 24 qubits.
class DenseState {
   public:
    using amp_t = std::complex<double>;
    static constexpr int32_t max_qubits = 24;

    // All qubits start in |+>.
    explicit DenseState(int32_t n);

    // Product state from per-qubit (amp0, amp1) pairs; normalized per qubit.
    static DenseState product_state(const std::vector<std::array<amp_t, 2>>& qubits);

    // (|0> + e^{i theta} |1>)/sqrt(2)
    static std::array<amp_t, 2> rotated_plus(double theta);

    int32_t n() const { return n_; }

    void apply_cz(int32_t a, int32_t b);
    // Z-axis rotation diag(1, e^{i theta}).
    void apply_rz(int32_t q, double theta);
    void apply_single(int32_t q, const std::array<amp_t, 4>& u);  // row-major 2x2
    void apply_pauli(const SparsePauli& p);

    // <psi| P |psi>; exact up to float rounding, imaginary part ~ 0 for
    // Hermitian P.
    double expectation(const SparsePauli& p) const;

    // Probability that the joint parity of single-qubit measurements of
    // the letters in p comes out even: (1 + <P>)/2.
    double parity_even_probability(const SparsePauli& p) const { return 0.5 * (1.0 + expectation(p)); }

    // Projective measurement of a Pauli product (parity measurement of
    // the single-qubit letters); collapses the state.
    int measure_pauli(const SparsePauli& p, Rng& rng, std::optional<int> forced = std::nullopt);

    // Measure qubit q in a basis, collapse, return outcome.
    int measure(int32_t q, MeasureBasis basis, Rng& rng, std::optional<int> forced = std::nullopt);

    double norm() const;

    const std::vector<amp_t>& amplitudes() const { return amp_; }

    // Reduced Bloch vector (<X>, <Y>, <Z>) of qubit q.
    std::array<double, 3> bloch(int32_t q) const;

   private:
    int32_t n_;
    std::vector<amp_t> amp_;

    void pauli_masks(const SparsePauli& p, uint32_t& xmask, uint32_t& zmask, int& y_count) const;
};

}  // namespace tcs
