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

#include "vqsvd/circuit.hpp"

#include <stdexcept>
#include <utility>

namespace vqsvd {

std::size_t Register::operator[](std::size_t q) const {
    if (q >= width) {
        throw std::invalid_argument("register: local qubit out of range");
    }
    return offset + q;
}

QuantumCircuit::QuantumCircuit(std::size_t num_qubits) : num_qubits_(num_qubits) {
    registers_["q"] = Register{0, num_qubits};
}

QuantumCircuit QuantumCircuit::with_block_registers(std::size_t n, std::size_t aux_width) {
    if (n == 0) {
        throw std::invalid_argument("with_block_registers: n must be positive");
    }
    if (aux_width == 0) {
        throw std::invalid_argument("with_block_registers: aux_width must be positive");
    }
    QuantumCircuit circuit;
    circuit.num_qubits_ = 3 * n + aux_width;
    circuit.registers_["dat"] = Register{0, 2 * n};
    circuit.registers_["aux"] = Register{2 * n, aux_width};
    circuit.registers_["isr"] = Register{2 * n + aux_width, n};
    return circuit;
}

const Register& QuantumCircuit::reg(const std::string& name) const {
    auto it = registers_.find(name);
    if (it == registers_.end()) {
        throw std::invalid_argument("circuit: no register named '" + name + "'");
    }
    return it->second;
}

bool QuantumCircuit::has_reg(const std::string& name) const {
    return registers_.count(name) != 0;
}

void QuantumCircuit::add(GateOp gate) {
    gate.validate(num_qubits_);
    gates_.push_back(std::move(gate));
}

void QuantumCircuit::add(const std::vector<GateOp>& gates) {
    for (const GateOp& gate : gates) {
        add(gate);
    }
}

void QuantumCircuit::append(const QuantumCircuit& other, std::size_t offset) {
    if (offset + other.num_qubits() > num_qubits_) {
        throw std::invalid_argument("append: shifted circuit does not fit");
    }
    for (GateOp gate : other.gates_) {
        for (std::size_t& q : gate.targets) {
            q += offset;
        }
        for (std::size_t& q : gate.controls) {
            q += offset;
        }
        add(std::move(gate));
    }
}

QuantumCircuit QuantumCircuit::inverse() const {
    QuantumCircuit out;
    out.num_qubits_ = num_qubits_;
    out.registers_ = registers_;
    out.gates_.reserve(gates_.size());
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
        out.gates_.push_back(it->inverse());
    }
    return out;
}

}  // namespace vqsvd
