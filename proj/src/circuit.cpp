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

#include "tcs/circuit.h"

#include <sstream>
#include <stdexcept>

namespace tcs {

std::string Circuit::serialize() const {
    std::ostringstream os;
    os << "init " << n << "\n";
    for (const auto& op : ops) {
        if (op.kind == Op::Kind::cz) {
            os << "cz " << op.a << " " << op.b << "\n";
        } else {
            os << "measure " << op.m.q << " "
               << (op.m.basis == MeasureBasis::X ? 'X'
                                                 : op.m.basis == MeasureBasis::Y ? 'Y' : 'Z');
            if (op.m.forced) os << " " << *op.m.forced;
            os << "\n";
        }
    }
    return os.str();
}

Circuit Circuit::parse(const std::string& text) {
    Circuit c;
    std::istringstream is(text);
    std::string line;
    bool have_init = false;
    int lineno = 0;
    while (std::getline(is, line)) {
        lineno++;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        auto fail = [&](const std::string& why) {
            throw std::invalid_argument("circuit line " + std::to_string(lineno) + ": " + why);
        };
        if (word == "init") {
            if (have_init) fail("duplicate init");
            if (!(ls >> c.n) || c.n < 1) fail("bad qubit count");
            have_init = true;
        } else if (word == "cz") {
            if (!have_init) fail("cz before init");
            Circuit::Op op;
            op.kind = Op::Kind::cz;
            if (!(ls >> op.a >> op.b)) fail("bad cz operands");
            if (op.a < 0 || op.a >= c.n || op.b < 0 || op.b >= c.n || op.a == op.b) {
                fail("cz operands out of range");
            }
            c.ops.push_back(op);
        } else if (word == "measure") {
            if (!have_init) fail("measure before init");
            Circuit::Op op;
            op.kind = Op::Kind::measure;
            std::string basis;
            if (!(ls >> op.m.q >> basis)) fail("bad measure record");
            if (op.m.q < 0 || op.m.q >= c.n) fail("measure qubit out of range");
            if (basis == "X") {
                op.m.basis = MeasureBasis::X;
            } else if (basis == "Y") {
                op.m.basis = MeasureBasis::Y;
            } else if (basis == "Z") {
                op.m.basis = MeasureBasis::Z;
            } else {
                fail("bad basis " + basis);
            }
            int forced;
            if (ls >> forced) {
                if (forced != 0 && forced != 1) fail("forced outcome must be 0 or 1");
                op.m.forced = forced;
            }
            c.ops.push_back(op);
        } else {
            fail("unknown record " + word);
        }
    }
    if (!have_init) throw std::invalid_argument("circuit has no init record");
    return c;
}

CircuitRun run_circuit(Tableau& t, const Circuit& c, Rng& rng) {
    if (t.n() != c.n) throw std::invalid_argument("tableau size does not match circuit");
    CircuitRun run;
    for (const auto& op : c.ops) {
        if (op.kind == Circuit::Op::Kind::cz) {
            t.apply_cz(op.a, op.b);
        } else {
            run.outcomes.push_back(t.measure(op.m.q, op.m.basis, rng, op.m.forced).outcome);
        }
    }
    return run;
}

CircuitRun run_circuit(DenseState& s, const Circuit& c, Rng& rng) {
    if (s.n() != c.n) throw std::invalid_argument("state size does not match circuit");
    CircuitRun run;
    for (const auto& op : c.ops) {
        if (op.kind == Circuit::Op::Kind::cz) {
            s.apply_cz(op.a, op.b);
        } else {
            run.outcomes.push_back(s.measure(op.m.q, op.m.basis, rng, op.m.forced));
        }
    }
    return run;
}

}  // namespace tcs
