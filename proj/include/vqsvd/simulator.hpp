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

#pragma once

#include <cstdint>
#include <map>

#include "vqsvd/circuit.hpp"
#include "vqsvd/matrix.hpp"
#include "vqsvd/statevector.hpp"

namespace vqsvd {

void apply_gate_in_place(const GateOp& gate, Statevector& state);

Statevector apply_gate(const GateOp& gate, Statevector state);

void apply_circuit_in_place(const QuantumCircuit& circuit, Statevector& state);

/// Runs the circuit on |0...0>.
Statevector run_circuit(const QuantumCircuit& circuit);

Statevector run_circuit(const QuantumCircuit& circuit, Statevector state);

enum class Part {
    Real,
    Imag,
};

/// Exact Hadamard-test expectation for <a|b> with |a> = prep_a|0> and
/// |b> = prep_b|0>. One ancilla is added above the qubits of the two
/// preparation circuits (which must act on the same count); the returned
/// value is P(ancilla = 0) - P(ancilla = 1), which equals Re<a|b> for
/// Part::Real and Im<a|b> for Part::Imag.
double hadamard_test(const QuantumCircuit& prep_a, const QuantumCircuit& prep_b, Part part);

/// Multinomial sampling of basis-state measurement outcomes. Deterministic
/// for a fixed seed. Throws std::invalid_argument when shots == 0.
std::map<std::uint64_t, std::uint64_t> sample_counts(const Statevector& state,
                                                     std::uint64_t shots,
                                                     std::uint64_t seed);

/// Full unitary of the circuit, column j obtained by running on |j>.
CMatrix circuit_unitary(const QuantumCircuit& circuit);

}  // namespace vqsvd
