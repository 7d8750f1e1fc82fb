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

#include <optional>
#include <string>
#include <vector>

#include "tcs/dense_state.h"
#include "tcs/rng.h"
#include "tcs/tableau.h"

namespace tcs {

// Ordered text circuit: one record per line.
//   init <n>
//   cz <a> <b>
//   measure <q> <X|Y|Z> [<forced 0|1>]
// Blank lines and '#' comments are ignored.
struct Circuit {
    struct Measure {
        int32_t q;
        MeasureBasis basis;
        std::optional<int> forced;
    };
    struct Op {
        enum class Kind { cz, measure } kind;
        int32_t a = 0, b = 0;  // cz operands
        Measure m{};
    };

    int32_t n = 0;
    std::vector<Op> ops;

    std::string serialize() const;
    static Circuit parse(const std::string& text);
};

struct CircuitRun {
    std::vector<int> outcomes;  // one per measure op, in order
};

// Clifford execution on the tableau backend.
CircuitRun run_circuit(Tableau& t, const Circuit& c, Rng& rng);

// Exact execution on the dense backend with explicit initial single-qubit
// states (defaults to all |+> when empty).
CircuitRun run_circuit(DenseState& s, const Circuit& c, Rng& rng);

}  // namespace tcs
