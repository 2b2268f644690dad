// Copyright 2026 The vqsvd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vqsvd/ansatz.hpp"

#include <stdexcept>

#include "vqsvd/simulator.hpp"
#include "vqsvd/types.hpp"

namespace vqsvd {

QuantumCircuit ansatz_circuit(const AnsatzSpec& spec, std::span<const double> params) {
    const std::size_t n = spec.num_qubits;
    if (n == 0 || spec.layers == 0) {
        throw std::invalid_argument("ansatz_circuit: num_qubits and layers must be positive");
    }
    if (params.size() != spec.param_count()) {
        throw std::invalid_argument("ansatz_circuit: expected 2 * n * layers parameters");
    }
    QuantumCircuit circuit(n);
    for (std::size_t layer = 0; layer < spec.layers; ++layer) {
        const std::size_t base = 2 * n * layer;
        for (std::size_t q = 0; q + 1 < n; ++q) {
            circuit.add(GateOp::cx(q, q + 1));
        }
        for (std::size_t q = 0; q < n; ++q) {
            circuit.add(GateOp::rz(q, params[base + q]));
        }
        for (std::size_t q = 0; q < n; ++q) {
            circuit.add(GateOp::ry(q, params[base + n + q]));
        }
    }
    return circuit;
}

CMatrix ansatz_matrix(const AnsatzSpec& spec, std::span<const double> params) {
    return circuit_unitary(ansatz_circuit(spec, params));
}

QuantumCircuit basis_prep(std::uint64_t i, std::size_t n) {
    if (i >= pow2(n)) {
        throw std::invalid_argument("basis_prep: index out of range");
    }
    QuantumCircuit circuit(n);
    for (std::size_t q = 0; q < n; ++q) {
        if ((i >> q) & 1) {
            circuit.add(GateOp::x(q));
        }
    }
    return circuit;
}

}  // namespace vqsvd
