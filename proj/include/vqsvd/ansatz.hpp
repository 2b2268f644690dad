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
#include <span>

#include "vqsvd/circuit.hpp"
#include "vqsvd/matrix.hpp"

namespace vqsvd {

/// Shape of the layered hardware-efficient ansatz W(gamma): each layer is
/// a CX chain (0->1, 1->2, ..., n-2 -> n-1) followed by an RZ on every
/// qubit and then an RY on every qubit, so a layer consumes 2n angles and
/// the whole circuit 2 * num_qubits * layers of them.
struct AnsatzSpec {
    std::size_t num_qubits = 1;
    std::size_t layers = 1;

    std::size_t param_count() const { return 2 * num_qubits * layers; }
};

/// Builds W(params). Layer k consumes params[2nk .. 2nk+n) for its RZ
/// angles (qubit order) and params[2nk+n .. 2nk+2n) for its RY angles.
/// Throws std::invalid_argument on a parameter-count mismatch.
QuantumCircuit ansatz_circuit(const AnsatzSpec& spec, std::span<const double> params);

/// Dense unitary of ansatz_circuit.
CMatrix ansatz_matrix(const AnsatzSpec& spec, std::span<const double> params);

/// Circuit mapping |0...0> to basis state |i>: X on every set bit of i.
QuantumCircuit basis_prep(std::uint64_t i, std::size_t n);

}  // namespace vqsvd
