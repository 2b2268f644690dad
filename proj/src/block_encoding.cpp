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

#include "vqsvd/block_encoding.hpp"

#include <cmath>
#include <stdexcept>

#include "vqsvd/types.hpp"

namespace vqsvd {

namespace {

void apply_shifted(const std::vector<GateOp>& gates, std::size_t offset, Statevector& state) {
    for (GateOp gate : gates) {
        for (std::size_t& q : gate.targets) {
            q += offset;
        }
        for (std::size_t& q : gate.controls) {
            q += offset;
        }
        apply_gate_in_place(gate, state);
    }
}

std::size_t checked_n(const CMatrix& m, const QuantumCircuit& left,
                      const QuantumCircuit& right) {
    if (!m.is_square()) {
        throw std::invalid_argument("expectation: matrix must be square");
    }
    const std::size_t n = m.qubit_count();
    if (n == SIZE_MAX || n == 0) {
        throw std::invalid_argument("expectation: dimension must be 2^n with n >= 1");
    }
    if (left.num_qubits() != n || right.num_qubits() != n) {
        throw std::invalid_argument("expectation: preparation circuit size mismatch");
    }
    return n;
}

}  // namespace

std::vector<GateOp> bell_transform(std::size_t high, std::size_t low) {
    if (high == low) {
        throw std::invalid_argument("bell_transform: qubits must be distinct");
    }
    return {GateOp::cx(high, low), GateOp::h(high)};
}

std::uint8_t g_map(std::uint8_t i) {
    static const std::uint8_t table[4] = {0, 1, 3, 2};
    if (i > 3) {
        throw std::invalid_argument("g_map: index must be in {0,1,2,3}");
    }
    return table[i];
}

std::vector<GateOp> k_gadget(std::size_t high, std::size_t low, std::size_t isr) {
    if (high == low || high == isr || low == isr) {
        throw std::invalid_argument("k_gadget: qubits must be distinct");
    }
    return {GateOp::cx(low, isr), GateOp::cz(high, isr)};
}

std::vector<GateOp> bell_layer(std::size_t n) {
    std::vector<GateOp> gates;
    for (std::size_t t = 0; t < n; ++t) {
        for (GateOp& gate : bell_transform(2 * t + 1, 2 * t)) {
            gates.push_back(std::move(gate));
        }
    }
    return gates;
}

std::vector<GateOp> k_layer(std::size_t n, std::size_t aux_width) {
    std::vector<GateOp> gates;
    for (std::size_t t = 0; t < n; ++t) {
        for (GateOp& gate : k_gadget(2 * t + 1, 2 * t, 2 * n + aux_width + t)) {
            gates.push_back(std::move(gate));
        }
    }
    return gates;
}

Statevector build_phi(const EncodedMatrixState& enc, const QuantumCircuit& isr_prep) {
    const std::size_t n = enc.n;
    if (isr_prep.num_qubits() != n) {
        throw std::invalid_argument("build_phi: isr_prep must act on n qubits");
    }
    if (enc.state.num_qubits() != 2 * n + enc.aux_width) {
        throw std::invalid_argument("build_phi: encoded state has wrong qubit count");
    }
    Statevector state = enc.state.with_appended_qubits(n);
    apply_shifted(bell_layer(n), 0, state);
    apply_shifted(isr_prep.gates(), 2 * n + enc.aux_width, state);
    apply_shifted(k_layer(n, enc.aux_width), 0, state);
    return state;
}

QuantumCircuit phi_circuit(const FlattenedMatrix& f, const QuantumCircuit& isr_prep) {
    if (isr_prep.num_qubits() != f.n) {
        throw std::invalid_argument("phi_circuit: isr_prep must act on n qubits");
    }
    QuantumCircuit circuit = QuantumCircuit::with_block_registers(f.n, 1);
    circuit.append(compile_state_prep(f), 0);
    circuit.add(bell_layer(f.n));
    circuit.append(isr_prep, 2 * f.n + 1);
    circuit.add(k_layer(f.n, 1));
    return circuit;
}

Statevector q_reference(const QuantumCircuit& isr_prep, std::size_t aux_width) {
    const std::size_t n = isr_prep.num_qubits();
    if (n == 0) {
        throw std::invalid_argument("q_reference: isr_prep must act on n >= 1 qubits");
    }
    const Statevector psi = run_circuit(isr_prep);
    const std::uint64_t dat_dim = pow2(2 * n);
    const double dat_amp = 1.0 / static_cast<double>(pow2(n));

    Statevector state(3 * n + aux_width);
    state[0] = cplx(0.0, 0.0);
    const std::size_t isr_shift = 2 * n + aux_width;
    for (std::uint64_t s = 0; s < psi.dim(); ++s) {
        const cplx amp = psi[s] * dat_amp;
        for (std::uint64_t d = 0; d < dat_dim; ++d) {
            state[d | (s << isr_shift)] = amp;
        }
    }
    return state;
}

QuantumCircuit q_reference_circuit(const QuantumCircuit& isr_prep, std::size_t aux_width) {
    const std::size_t n = isr_prep.num_qubits();
    if (n == 0) {
        throw std::invalid_argument("q_reference_circuit: isr_prep must act on n >= 1 qubits");
    }
    QuantumCircuit circuit = QuantumCircuit::with_block_registers(n, aux_width);
    for (std::size_t q = 0; q < 2 * n; ++q) {
        circuit.add(GateOp::h(q));
    }
    circuit.append(isr_prep, 2 * n + aux_width);
    return circuit;
}

double BlockEncoding::subnormalization() const {
    return eta * std::sqrt(static_cast<double>(pow2(n)));
}

BlockEncoding make_block_encoding(const FlattenedMatrix& f, const QuantumCircuit& isr_prep) {
    BlockEncoding be;
    be.phi_circuit = phi_circuit(f, isr_prep);
    be.n = f.n;
    be.aux_width = 1;
    be.eta = static_cast<double>(pow2(f.n));
    return be;
}

cplx expectation_novel(const CMatrix& m, const QuantumCircuit& psi_prep) {
    return expectation_novel(m, psi_prep, psi_prep);
}

cplx expectation_novel(const CMatrix& m, const QuantumCircuit& left_prep,
                       const QuantumCircuit& right_prep) {
    checked_n(m, left_prep, right_prep);
    const EncodedMatrixState enc = encode_frqi(zorder_flatten(m));
    return expectation_general(enc, left_prep, right_prep);
}

cplx expectation_general(const EncodedMatrixState& enc, const QuantumCircuit& left_prep,
                         const QuantumCircuit& right_prep) {
    if (left_prep.num_qubits() != enc.n || right_prep.num_qubits() != enc.n) {
        throw std::invalid_argument("expectation: preparation circuit size mismatch");
    }
    const Statevector phi = build_phi(enc, right_prep);
    const Statevector reference = q_reference(left_prep, enc.aux_width);
    const cplx overlap = inner_product(reference, phi);
    return overlap * enc.eta * std::sqrt(static_cast<double>(pow2(enc.n)));
}

double expectation_novel_hadamard(const CMatrix& m, const QuantumCircuit& left_prep,
                                  const QuantumCircuit& right_prep, Part part) {
    checked_n(m, left_prep, right_prep);
    const FlattenedMatrix flat = zorder_flatten(m);
    const QuantumCircuit phi_prep = phi_circuit(flat, right_prep);
    const QuantumCircuit reference_prep = q_reference_circuit(left_prep, 1);
    const double overlap_part = hadamard_test(reference_prep, phi_prep, part);
    const double eta = static_cast<double>(pow2(flat.n));
    return overlap_part * eta * std::sqrt(eta);
}

double magnitude_squared_novel(const CMatrix& m, const QuantumCircuit& psi_prep) {
    return magnitude_squared_novel(m, psi_prep, psi_prep);
}

double magnitude_squared_novel(const CMatrix& m, const QuantumCircuit& left_prep,
                               const QuantumCircuit& right_prep) {
    const std::size_t n = checked_n(m, left_prep, right_prep);
    const EncodedMatrixState enc = encode_frqi(zorder_flatten(m));
    Statevector phi = build_phi(enc, right_prep);

    // Q^dagger: undo the isr preparation, then the data Hadamards.
    apply_shifted(left_prep.inverse().gates(), 2 * n + enc.aux_width, phi);
    for (std::size_t q = 0; q < 2 * n; ++q) {
        apply_gate_in_place(GateOp::h(q), phi);
    }
    return prob_basis_state(phi, 0) * static_cast<double>(pow2(3 * n));
}

}  // namespace vqsvd
