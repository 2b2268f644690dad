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

#include "vqsvd/statevector.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace vqsvd {

Statevector::Statevector(std::size_t num_qubits)
    : num_qubits_(num_qubits), amps_(pow2(num_qubits), cplx(0.0, 0.0)) {
    amps_[0] = cplx(1.0, 0.0);
}

Statevector Statevector::basis_state(std::size_t num_qubits, std::uint64_t index) {
    if (index >= pow2(num_qubits)) {
        throw std::invalid_argument("basis_state: index out of range");
    }
    Statevector state(num_qubits);
    state.amps_[0] = cplx(0.0, 0.0);
    state.amps_[index] = cplx(1.0, 0.0);
    return state;
}

Statevector Statevector::from_amplitudes(std::size_t num_qubits, std::vector<cplx> amps) {
    if (amps.size() != pow2(num_qubits)) {
        throw std::invalid_argument("from_amplitudes: size is not 2^num_qubits");
    }
    Statevector state;
    state.num_qubits_ = num_qubits;
    state.amps_ = std::move(amps);
    return state;
}

double Statevector::norm_sqr() const {
    double total = 0.0;
    for (const cplx& a : amps_) {
        total += std::norm(a);
    }
    return total;
}

double Statevector::norm() const { return std::sqrt(norm_sqr()); }

Statevector Statevector::with_appended_qubits(std::size_t count) const {
    Statevector out;
    out.num_qubits_ = num_qubits_ + count;
    out.amps_.assign(pow2(out.num_qubits_), cplx(0.0, 0.0));
    for (std::uint64_t k = 0; k < dim(); ++k) {
        out.amps_[k] = amps_[k];
    }
    return out;
}

cplx inner_product(const Statevector& a, const Statevector& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("inner_product: qubit count mismatch");
    }
    cplx total(0.0, 0.0);
    for (std::uint64_t k = 0; k < a.dim(); ++k) {
        total += std::conj(a[k]) * b[k];
    }
    return total;
}

double prob_basis_state(const Statevector& state, std::uint64_t index) {
    if (index >= state.dim()) {
        throw std::invalid_argument("prob_basis_state: index out of range");
    }
    return std::norm(state[index]);
}

}  // namespace vqsvd
