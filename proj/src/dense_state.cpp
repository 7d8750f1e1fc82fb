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

#include "tcs/dense_state.h"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace tcs {

DenseState::DenseState(int32_t n) : n_(n) {
    if (n < 1 || n > max_qubits) throw std::invalid_argument("dense backend qubit count overflow");
    amp_.assign(size_t{1} << n, amp_t{0});
    double a = std::pow(2.0, -0.5 * n);
    for (auto& v : amp_) v = a;
}

DenseState DenseState::product_state(const std::vector<std::array<amp_t, 2>>& qubits) {
    int32_t n = static_cast<int32_t>(qubits.size());
    DenseState s(n);
    for (size_t i = 0; i < s.amp_.size(); i++) {
        amp_t v{1.0, 0.0};
        for (int32_t q = 0; q < n; q++) {
            const auto& pair = qubits[static_cast<size_t>(q)];
            double nrm = std::sqrt(std::norm(pair[0]) + std::norm(pair[1]));
            v *= pair[(i >> q) & 1] / nrm;
        }
        s.amp_[i] = v;
    }
    return s;
}

std::array<DenseState::amp_t, 2> DenseState::rotated_plus(double theta) {
    return {amp_t{1.0 / std::sqrt(2.0), 0.0},
            std::polar(1.0 / std::sqrt(2.0), theta)};
}

void DenseState::apply_cz(int32_t a, int32_t b) {
    if (a == b) throw std::invalid_argument("cz needs distinct qubits");
    uint32_t m = (1u << a) | (1u << b);
    for (size_t i = 0; i < amp_.size(); i++) {
        if ((i & m) == m) amp_[i] = -amp_[i];
    }
}

void DenseState::apply_rz(int32_t q, double theta) {
    amp_t ph = std::polar(1.0, theta);
    uint32_t m = 1u << q;
    for (size_t i = 0; i < amp_.size(); i++) {
        if (i & m) amp_[i] *= ph;
    }
}

void DenseState::apply_single(int32_t q, const std::array<amp_t, 4>& u) {
    uint32_t m = 1u << q;
    for (size_t i = 0; i < amp_.size(); i++) {
        if (i & m) continue;
        amp_t a0 = amp_[i], a1 = amp_[i | m];
        amp_[i] = u[0] * a0 + u[1] * a1;
        amp_[i | m] = u[2] * a0 + u[3] * a1;
    }
}

void DenseState::pauli_masks(const SparsePauli& p, uint32_t& xmask, uint32_t& zmask,
                             int& y_count) const {
    xmask = zmask = 0;
    y_count = 0;
    for (const auto& [q, l] : p.terms) {
        if (q < 0 || q >= n_) throw std::invalid_argument("pauli index out of range");
        if (l == PauliLetter::X || l == PauliLetter::Y) xmask |= 1u << q;
        if (l == PauliLetter::Z || l == PauliLetter::Y) zmask |= 1u << q;
        if (l == PauliLetter::Y) y_count++;
    }
}

void DenseState::apply_pauli(const SparsePauli& p) {
    uint32_t xmask, zmask;
    int yc;
    pauli_masks(p, xmask, zmask, yc);
    static const amp_t ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    amp_t base = ipow[yc & 3] * static_cast<double>(p.sign);
    std::vector<amp_t> out(amp_.size());
    for (size_t i = 0; i < amp_.size(); i++) {
        amp_t c = base;
        if (std::popcount(static_cast<uint32_t>(i) & zmask) & 1) c = -c;
        out[i ^ xmask] = c * amp_[i];
    }
    amp_.swap(out);
}

double DenseState::expectation(const SparsePauli& p) const {
    uint32_t xmask, zmask;
    int yc;
    pauli_masks(p, xmask, zmask, yc);
    static const amp_t ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    amp_t base = ipow[yc & 3] * static_cast<double>(p.sign);
    amp_t acc{0, 0};
    for (size_t i = 0; i < amp_.size(); i++) {
        amp_t c = base;
        if (std::popcount(static_cast<uint32_t>(i) & zmask) & 1) c = -c;
        acc += std::conj(amp_[i ^ xmask]) * c * amp_[i];
    }
    return acc.real();
}

int DenseState::measure_pauli(const SparsePauli& p, Rng& rng, std::optional<int> forced) {
    double p0 = parity_even_probability(p);
    int outcome;
    if (forced) {
        outcome = *forced & 1;
        double pr = outcome == 0 ? p0 : 1.0 - p0;
        if (pr < 1e-12) throw std::runtime_error("forced outcome has zero probability");
    } else {
        outcome = rng.next_double() < p0 ? 0 : 1;
    }
    // Project with (I +- P)/2 and renormalize.
    SparsePauli q = p;
    q.sign = outcome == 0 ? p.sign : -p.sign;
    DenseState tmp = *this;
    tmp.apply_pauli(q);
    for (size_t i = 0; i < amp_.size(); i++) amp_[i] = 0.5 * (amp_[i] + tmp.amp_[i]);
    double nrm = std::sqrt(norm());
    for (auto& v : amp_) v /= nrm;
    return outcome;
}

int DenseState::measure(int32_t q, MeasureBasis basis, Rng& rng, std::optional<int> forced) {
    PauliLetter l = basis == MeasureBasis::X   ? PauliLetter::X
                    : basis == MeasureBasis::Y ? PauliLetter::Y
                                               : PauliLetter::Z;
    return measure_pauli(SparsePauli::single(q, l), rng, forced);
}

double DenseState::norm() const {
    double s = 0;
    for (const auto& v : amp_) s += std::norm(v);
    return s;
}

std::array<double, 3> DenseState::bloch(int32_t q) const {
    return {expectation(SparsePauli::single(q, PauliLetter::X)),
            expectation(SparsePauli::single(q, PauliLetter::Y)),
            expectation(SparsePauli::single(q, PauliLetter::Z))};
}

}  // namespace tcs
