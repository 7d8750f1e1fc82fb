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

#include "tcs/pauli.h"

#include <sstream>
#include <stdexcept>

namespace tcs {

PauliOperator PauliOperator::single(const Coord3& site, PauliLetter l) {
    PauliOperator p;
    switch (l) {
        case PauliLetter::I: break;
        case PauliLetter::X: p.letters_[site] = {1, 0}; break;
        case PauliLetter::Z: p.letters_[site] = {0, 1}; break;
        case PauliLetter::Y:
            // Y = i * X Z in the X-then-Z convention.
            p.letters_[site] = {1, 1};
            p.phase_ = 1;
            break;
    }
    return p;
}

PauliOperator PauliOperator::z_string(const std::vector<Coord3>& sites) {
    PauliOperator p;
    for (const auto& s : sites) p.mul(single(s, PauliLetter::Z));
    return p;
}

PauliOperator PauliOperator::x_string(const std::vector<Coord3>& sites) {
    PauliOperator p;
    for (const auto& s : sites) p.mul(single(s, PauliLetter::X));
    return p;
}

void PauliOperator::mul(const PauliOperator& other) {
    phase_ = (phase_ + other.phase_) & 3;
    for (const auto& [site, ab] : other.letters_) {
        auto it = letters_.find(site);
        if (it == letters_.end()) {
            letters_[site] = ab;
            continue;
        }
        // (X^x1 Z^z1)(X^x2 Z^z2) = (-1)^(z1 x2) X^(x1^x2) Z^(z1^z2)
        if (it->second.z & ab.x) phase_ = (phase_ + 2) & 3;
        it->second.x ^= ab.x;
        it->second.z ^= ab.z;
        if (!it->second.x && !it->second.z) letters_.erase(it);
    }
}

bool PauliOperator::commutes_with(const PauliOperator& other) const {
    int anti = 0;
    for (const auto& [site, ab] : other.letters_) {
        auto it = letters_.find(site);
        if (it == letters_.end()) continue;
        anti ^= (it->second.x & ab.z) ^ (it->second.z & ab.x);
    }
    return anti == 0;
}

PauliLetter PauliOperator::letter(const Coord3& site) const {
    auto it = letters_.find(site);
    if (it == letters_.end()) return PauliLetter::I;
    if (it->second.x && it->second.z) return PauliLetter::Y;
    return it->second.x ? PauliLetter::X : PauliLetter::Z;
}

std::vector<Coord3> PauliOperator::support() const {
    std::vector<Coord3> out;
    out.reserve(letters_.size());
    for (const auto& [site, ab] : letters_) out.push_back(site);
    return out;
}

std::vector<Coord3> PauliOperator::x_support() const {
    std::vector<Coord3> out;
    for (const auto& [site, ab] : letters_) {
        if (ab.x) out.push_back(site);
    }
    return out;
}

std::vector<Coord3> PauliOperator::z_support() const {
    std::vector<Coord3> out;
    for (const auto& [site, ab] : letters_) {
        if (ab.z) out.push_back(site);
    }
    return out;
}

int PauliOperator::y_count() const {
    int n = 0;
    for (const auto& [site, ab] : letters_) n += (ab.x & ab.z);
    return n;
}

bool PauliOperator::is_hermitian() const { return ((phase_ - y_count()) & 1) == 0; }

int PauliOperator::sign() const {
    int e = (phase_ - y_count()) & 3;
    if (e == 0) return +1;
    if (e == 2) return -1;
    throw std::logic_error("sign() on a non-Hermitian Pauli product");
}

std::string PauliOperator::str() const {
    std::ostringstream os;
    int e = (phase_ - y_count()) & 3;
    static const char* pre[4] = {"+", "+i", "-", "-i"};
    os << pre[e];
    if (letters_.empty()) {
        os << "I";
        return os.str();
    }
    bool first = true;
    for (const auto& [site, ab] : letters_) {
        if (!first) os << " ";
        first = false;
        PauliLetter l = (ab.x && ab.z) ? PauliLetter::Y : (ab.x ? PauliLetter::X : PauliLetter::Z);
        os << to_char(l) << site;
    }
    return os.str();
}

}  // namespace tcs
