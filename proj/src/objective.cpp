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

#include "vqsvd/objective.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "vqsvd/block_encoding.hpp"
#include "vqsvd/simulator.hpp"
#include "vqsvd/types.hpp"

namespace vqsvd {

void ObjectiveConfig::validate(std::size_t n) const {
    if (t < 1 || t > pow2(n)) {
        throw std::invalid_argument("objective: T must satisfy 1 <= T <= 2^n");
    }
    if (kind == ObjectiveKind::Original && !weights.empty()) {
        if (weights.size() != t) {
            throw std::invalid_argument("objective: weights must have length T");
        }
        for (std::size_t i = 0; i < weights.size(); ++i) {
            if (!(weights[i] > 0.0)) {
                throw std::invalid_argument("objective: weights must be positive");
            }
            if (i > 0 && !(weights[i] < weights[i - 1])) {
                throw std::invalid_argument("objective: weights must be strictly decreasing");
            }
        }
    }
}

std::vector<double> ObjectiveConfig::effective_weights() const {
    if (!weights.empty()) {
        return weights;
    }
    std::vector<double> w(t);
    for (std::size_t i = 0; i < t; ++i) {
        w[i] = static_cast<double>(t - i);
    }
    return w;
}

ObjectiveEvaluator::ObjectiveEvaluator(const CMatrix& a, ObjectiveConfig config,
                                       AnsatzSpec ansatz)
    : config_(std::move(config)), ansatz_(ansatz), a_scaled_(0, 0) {
    if (!a.is_square()) {
        throw std::invalid_argument("objective: matrix must be square");
    }
    n_ = a.qubit_count();
    if (n_ == SIZE_MAX || n_ == 0) {
        throw std::invalid_argument("objective: dimension must be 2^n with n >= 1");
    }
    if (ansatz_.num_qubits != n_) {
        throw std::invalid_argument("objective: ansatz acts on the wrong qubit count");
    }
    config_.validate(n_);
    weights_ = config_.effective_weights();

    auto [scaled, factor] = scale_matrix(a);
    a_scaled_ = std::move(scaled);
    scale_ = factor;

    enc_ = encode_frqi(zorder_flatten(a_scaled_));
    enc_bell_ = enc_.state;
    for (const GateOp& gate : bell_layer(n_)) {
        apply_gate_in_place(gate, enc_bell_);
    }
    terms_ = pauli_decompose(a_scaled_);
}

cplx ObjectiveEvaluator::matrix_element(std::span<const double> alpha,
                                        std::span<const double> beta,
                                        std::uint64_t i) const {
    if (i >= pow2(n_)) {
        throw std::invalid_argument("matrix_element: index out of range");
    }
    if (config_.backend == Backend::PauliHadamard) {
        return element_pauli(alpha, beta, i);
    }
    return element_novel(alpha, beta, i);
}

cplx ObjectiveEvaluator::element_pauli(std::span<const double> alpha,
                                       std::span<const double> beta, std::uint64_t i) const {
    QuantumCircuit prep_a = basis_prep(i, n_);
    prep_a.append(ansatz_circuit(ansatz_, alpha), 0);

    cplx total(0.0, 0.0);
    for (const auto& [s, coeff] : terms_.terms) {
        QuantumCircuit prep_b = basis_prep(i, n_);
        prep_b.append(ansatz_circuit(ansatz_, beta), 0);
        prep_b.add(pauli_string_gates(s, 0));
        const double re = hadamard_test(prep_a, prep_b, Part::Real);
        const double im = hadamard_test(prep_a, prep_b, Part::Imag);
        total += coeff * cplx(re, im);
    }
    return total;
}

cplx ObjectiveEvaluator::element_novel(std::span<const double> alpha,
                                       std::span<const double> beta, std::uint64_t i) const {
    QuantumCircuit right = basis_prep(i, n_);
    right.append(ansatz_circuit(ansatz_, beta), 0);

    Statevector phi = enc_bell_.with_appended_qubits(n_);
    const std::size_t isr_offset = 2 * n_ + enc_.aux_width;
    for (GateOp gate : right.gates()) {
        for (std::size_t& q : gate.targets) {
            q += isr_offset;
        }
        for (std::size_t& q : gate.controls) {
            q += isr_offset;
        }
        apply_gate_in_place(gate, phi);
    }
    for (const GateOp& gate : k_layer(n_, enc_.aux_width)) {
        apply_gate_in_place(gate, phi);
    }

    QuantumCircuit left = basis_prep(i, n_);
    left.append(ansatz_circuit(ansatz_, alpha), 0);
    const Statevector reference = q_reference(left, enc_.aux_width);
    const cplx overlap = inner_product(reference, phi);
    return overlap * enc_.eta * std::sqrt(static_cast<double>(pow2(n_)));
}

std::pair<double, std::uint64_t> ObjectiveEvaluator::objective(
    std::span<const double> alpha, std::span<const double> beta) const {
    double value = 0.0;
    for (std::uint64_t i = 0; i < config_.t; ++i) {
        const cplx element = matrix_element(alpha, beta, i);
        if (config_.kind == ObjectiveKind::Modified) {
            value += std::norm(element);
        } else {
            value += weights_[i] * element.real();
        }
    }
    return {value, runs_per_objective()};
}

std::uint64_t ObjectiveEvaluator::runs_per_objective() const {
    if (config_.kind == ObjectiveKind::Modified) {
        return config_.t;
    }
    return 2 * config_.t * static_cast<std::uint64_t>(terms_.terms.size());
}

}  // namespace vqsvd
