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
#include <vector>

#include "vqsvd/gates.hpp"
#include "vqsvd/matrix.hpp"

namespace vqsvd {

/// Index string over the basis {P0, P1, P2, P3}; element 0 acts on the
/// leftmost tensor factor, i.e. the most significant qubit.
using PauliIndexString = std::vector<std::uint8_t>;

/// Sparse decomposition A = sum_s c_s P_s over length-n index strings.
struct PauliCoefficients {
    std::size_t n = 0;
    std::map<PauliIndexString, cplx> terms;
};

/// The four 2x2 basis matrices: P0 = I, P1 = X, P2 = [[0,1],[-1,0]],
/// P3 = Z. All four are real and unitary; P2 equals iY and is not
/// Hermitian.
CMatrix pauli_basis_matrix(std::uint8_t i);

/// Tensor product P_{s[0]} (x) ... (x) P_{s[n-1]}.
CMatrix pauli_string_matrix(const PauliIndexString& s);

/// Coefficients c_s = Tr(P_s^dagger A) / 2^n. Terms with |c| <
/// drop_tolerance are omitted; pass 0 to keep all 4^n terms. Each basis
/// string has exactly one nonzero entry per column, so the traces are
/// accumulated without materializing any string matrix. Throws
/// std::invalid_argument unless A is square with power-of-two dimension.
PauliCoefficients pauli_decompose(const CMatrix& a, double drop_tolerance = 1e-12);

/// sum_s c_s P_s.
CMatrix pauli_reconstruct(const PauliCoefficients& c);

/// Gate sequence realizing the string on qubits [offset, offset + n),
/// with s[0] on the most significant qubit offset + n - 1. P1 -> X,
/// P2 -> RY(-pi), P3 -> Z; identity factors emit nothing.
std::vector<GateOp> pauli_string_gates(const PauliIndexString& s, std::size_t offset = 0);

}  // namespace vqsvd
