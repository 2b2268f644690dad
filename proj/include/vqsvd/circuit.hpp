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

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "vqsvd/gates.hpp"

namespace vqsvd {

/// Contiguous qubit range [offset, offset + width).
struct Register {
    std::size_t offset = 0;
    std::size_t width = 0;

    /// Global index of local qubit `q`.
    std::size_t operator[](std::size_t q) const;
};

/// Ordered gate list over a fixed number of qubits, with optional named
/// contiguous registers.
class QuantumCircuit {
  public:
    QuantumCircuit() = default;

    /// Single register "q" spanning all qubits.
    explicit QuantumCircuit(std::size_t num_qubits);

    /// Layout used by the matrix-element circuits: register "dat" at
    /// [0, 2n), "aux" at [2n, 2n + aux_width), "isr" at
    /// [2n + aux_width, 3n + aux_width).
    static QuantumCircuit with_block_registers(std::size_t n, std::size_t aux_width = 1);

    std::size_t num_qubits() const { return num_qubits_; }
    const std::vector<GateOp>& gates() const { return gates_; }

    const Register& reg(const std::string& name) const;
    bool has_reg(const std::string& name) const;

    /// Validates the gate against num_qubits() before storing it.
    void add(GateOp gate);
    void add(const std::vector<GateOp>& gates);

    /// Appends every gate of `other` with all wires shifted by `offset`.
    void append(const QuantumCircuit& other, std::size_t offset = 0);

    /// Gates inverted and in reverse order.
    QuantumCircuit inverse() const;

    std::size_t size() const { return gates_.size(); }

  private:
    std::size_t num_qubits_ = 0;
    std::vector<GateOp> gates_;
    std::map<std::string, Register> registers_;
};

}  // namespace vqsvd
