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

#include "vqsvd/simulator.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "vqsvd/types.hpp"

namespace vqsvd {

namespace {

void apply_single_qubit(const CMatrix& u, std::size_t target, Statevector& state) {
    const std::uint64_t dim = state.dim();
    const std::uint64_t step = std::uint64_t{1} << target;
    const cplx u00 = u(0, 0);
    const cplx u01 = u(0, 1);
    const cplx u10 = u(1, 0);
    const cplx u11 = u(1, 1);
    for (std::uint64_t base = 0; base < dim; base += 2 * step) {
        for (std::uint64_t low = 0; low < step; ++low) {
            const std::uint64_t i0 = base + low;
            const std::uint64_t i1 = i0 + step;
            const cplx a0 = state[i0];
            const cplx a1 = state[i1];
            state[i0] = u00 * a0 + u01 * a1;
            state[i1] = u10 * a0 + u11 * a1;
        }
    }
}

void apply_masked(const CMatrix& u, const std::vector<std::size_t>& targets,
                  std::uint64_t control_mask, Statevector& state) {
    const std::uint64_t dim = state.dim();
    const std::size_t m = targets.size();
    const std::uint64_t local_dim = std::uint64_t{1} << m;

    std::uint64_t target_mask = 0;
    for (std::size_t q : targets) {
        target_mask |= std::uint64_t{1} << q;
    }

    // Local bit j of the base-matrix index lives on targets[m - 1 - j],
    // so targets[0] supplies the most significant local bit.
    std::vector<std::uint64_t> offsets(local_dim);
    for (std::uint64_t l = 0; l < local_dim; ++l) {
        std::uint64_t off = 0;
        for (std::size_t j = 0; j < m; ++j) {
            if ((l >> j) & 1) {
                off |= std::uint64_t{1} << targets[m - 1 - j];
            }
        }
        offsets[l] = off;
    }

    std::vector<cplx> local(local_dim);
    for (std::uint64_t k = 0; k < dim; ++k) {
        if ((k & target_mask) != 0 || (k & control_mask) != control_mask) {
            continue;
        }
        for (std::uint64_t l = 0; l < local_dim; ++l) {
            local[l] = state[k | offsets[l]];
        }
        for (std::uint64_t r = 0; r < local_dim; ++r) {
            cplx acc(0.0, 0.0);
            for (std::uint64_t c = 0; c < local_dim; ++c) {
                acc += u(r, c) * local[c];
            }
            state[k | offsets[r]] = acc;
        }
    }
}

}  // namespace

void apply_gate_in_place(const GateOp& gate, Statevector& state) {
    gate.validate(state.num_qubits());
    const CMatrix u = gate.base_matrix();
    if (gate.controls.empty() && gate.targets.size() == 1) {
        apply_single_qubit(u, gate.targets[0], state);
        return;
    }
    std::uint64_t control_mask = 0;
    for (std::size_t q : gate.controls) {
        control_mask |= std::uint64_t{1} << q;
    }
    apply_masked(u, gate.targets, control_mask, state);
}

Statevector apply_gate(const GateOp& gate, Statevector state) {
    apply_gate_in_place(gate, state);
    return state;
}

void apply_circuit_in_place(const QuantumCircuit& circuit, Statevector& state) {
    if (circuit.num_qubits() != state.num_qubits()) {
        throw std::invalid_argument("apply_circuit: qubit count mismatch");
    }
    for (const GateOp& gate : circuit.gates()) {
        apply_gate_in_place(gate, state);
    }
}

Statevector run_circuit(const QuantumCircuit& circuit) {
    Statevector state(circuit.num_qubits());
    apply_circuit_in_place(circuit, state);
    return state;
}

Statevector run_circuit(const QuantumCircuit& circuit, Statevector state) {
    apply_circuit_in_place(circuit, state);
    return state;
}

double hadamard_test(const QuantumCircuit& prep_a, const QuantumCircuit& prep_b, Part part) {
    if (prep_a.num_qubits() != prep_b.num_qubits()) {
        throw std::invalid_argument("hadamard_test: preparation circuits differ in size");
    }
    const std::size_t nq = prep_a.num_qubits();
    const std::size_t anc = nq;

    QuantumCircuit circuit(nq + 1);
    circuit.add(GateOp::h(anc));
    circuit.add(GateOp::x(anc));
    for (const GateOp& gate : prep_a.gates()) {
        circuit.add(gate.controlled_by(anc));
    }
    circuit.add(GateOp::x(anc));
    for (const GateOp& gate : prep_b.gates()) {
        circuit.add(gate.controlled_by(anc));
    }
    if (part == Part::Imag) {
        // S^dagger up to global phase.
        circuit.add(GateOp::rz(anc, -0.25 * kTwoPi));
    }
    circuit.add(GateOp::h(anc));

    const Statevector state = run_circuit(circuit);
    const std::uint64_t anc_bit = std::uint64_t{1} << anc;
    double p0 = 0.0;
    double p1 = 0.0;
    for (std::uint64_t k = 0; k < state.dim(); ++k) {
        if (k & anc_bit) {
            p1 += std::norm(state[k]);
        } else {
            p0 += std::norm(state[k]);
        }
    }
    return p0 - p1;
}

std::map<std::uint64_t, std::uint64_t> sample_counts(const Statevector& state,
                                                     std::uint64_t shots,
                                                     std::uint64_t seed) {
    if (shots == 0) {
        throw std::invalid_argument("sample_counts: shots must be positive");
    }
    std::vector<double> cumulative(state.dim());
    double total = 0.0;
    for (std::uint64_t k = 0; k < state.dim(); ++k) {
        total += std::norm(state[k]);
        cumulative[k] = total;
    }

    std::mt19937_64 gen(seed);
    std::map<std::uint64_t, std::uint64_t> counts;
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double r = total * ((gen() >> 11) * 0x1.0p-53);
        const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), r);
        std::uint64_t outcome = static_cast<std::uint64_t>(it - cumulative.begin());
        if (outcome >= state.dim()) {
            outcome = state.dim() - 1;
        }
        ++counts[outcome];
    }
    return counts;
}

CMatrix circuit_unitary(const QuantumCircuit& circuit) {
    const std::uint64_t dim = pow2(circuit.num_qubits());
    CMatrix u(dim, dim);
    for (std::uint64_t col = 0; col < dim; ++col) {
        Statevector state = Statevector::basis_state(circuit.num_qubits(), col);
        apply_circuit_in_place(circuit, state);
        for (std::uint64_t row = 0; row < dim; ++row) {
            u(row, col) = state[row];
        }
    }
    return u;
}

}  // namespace vqsvd
