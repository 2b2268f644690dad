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
#include <cstdint>
#include <vector>

#include "vqsvd/types.hpp"

namespace vqsvd {

/// Dense complex amplitude vector over `num_qubits` qubits.
///
/// Qubit ordering convention (used everywhere in this library): qubit q
/// holds bit q of the basis index, i.e. qubit 0 is the least significant
/// bit. A ket written |b_{n-1} ... b_1 b_0> therefore has amplitude index
/// sum_q b_q 2^q, and dense matrices use the same bit-to-qubit mapping for
/// their row/column indices.
class Statevector {
  public:
    Statevector() = default;

    /// |0...0> over `num_qubits`.
    explicit Statevector(std::size_t num_qubits);

    static Statevector basis_state(std::size_t num_qubits, std::uint64_t index);
    static Statevector from_amplitudes(std::size_t num_qubits, std::vector<cplx> amps);

    std::size_t num_qubits() const { return num_qubits_; }
    std::uint64_t dim() const { return pow2(num_qubits_); }

    cplx& operator[](std::uint64_t k) { return amps_[k]; }
    const cplx& operator[](std::uint64_t k) const { return amps_[k]; }

    const std::vector<cplx>& amplitudes() const { return amps_; }
    std::vector<cplx>& amplitudes() { return amps_; }

    double norm_sqr() const;
    double norm() const;

    /// Same state extended by `count` additional qubits in |0>, appended at
    /// the most significant positions.
    Statevector with_appended_qubits(std::size_t count) const;

  private:
    std::size_t num_qubits_ = 0;
    std::vector<cplx> amps_;
};

/// <a|b>, conjugate-linear in the first argument.
cplx inner_product(const Statevector& a, const Statevector& b);

/// |amplitudes[index]|^2.
double prob_basis_state(const Statevector& state, std::uint64_t index);

}  // namespace vqsvd
