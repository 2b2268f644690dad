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
#include <utility>
#include <vector>

#include "vqsvd/circuit.hpp"
#include "vqsvd/matrix.hpp"
#include "vqsvd/statevector.hpp"

namespace vqsvd {

/// Z-order flat index of entry (i, j) of a 2^n x 2^n matrix: bit p of the
/// result is bit p/2 of j for even p and bit p/2 of i for odd p, bits
/// counted from the least significant end. Throws std::invalid_argument
/// for out-of-range indices.
std::uint64_t interleave_index(std::uint64_t i, std::uint64_t j, std::size_t n);

/// Inverse of interleave_index; returns (i, j).
std::pair<std::uint64_t, std::uint64_t> deinterleave_index(std::uint64_t k, std::size_t n);

/// A 2^n x 2^n matrix stored as a Z-order vector of length 2^{2n}.
/// `scale` records the factor the original matrix was divided by before
/// flattening; the stored values satisfy max |value| <= 1.
struct FlattenedMatrix {
    std::size_t n = 0;
    std::vector<cplx> values;
    double scale = 1.0;
};

/// Divides by max |entry| so the result has max |entry| == 1, returning
/// the scaled matrix and the divisor. A zero matrix is returned unchanged
/// with scale 1.
std::pair<CMatrix, double> scale_matrix(const CMatrix& a);

/// Flattens a pre-scaled square matrix; `scale` is recorded as given.
/// Throws std::invalid_argument when the dimension is not a power of two
/// or any |entry| exceeds 1.
FlattenedMatrix zorder_flatten(const CMatrix& a, double scale = 1.0);

/// Inverse placement; the recorded scale is not multiplied back in.
CMatrix zorder_unflatten(const FlattenedMatrix& f);

/// Amplitude encoding of a flattened matrix into 2n data qubits plus one
/// auxiliary qubit above them. The aux = |0> block carries values / eta
/// exactly with eta = 2^n; the aux = |1> block carries
/// sqrt(1 - |value|^2) / eta, which for real values reproduces the
/// theta = 2 arccos(value) rotation construction.
struct EncodedMatrixState {
    Statevector state;
    std::size_t n = 0;
    std::size_t aux_width = 1;
    double eta = 1.0;
};

EncodedMatrixState encode_frqi(const FlattenedMatrix& f);

/// Circuit over 2n + 1 qubits preparing the encode_frqi state from
/// |0...0>: Hadamards on the data qubits followed by one fully controlled
/// RY(2 arccos value) per flat index targeting the aux qubit. Only real
/// values are accepted; complex matrices use encode_frqi directly.
QuantumCircuit compile_state_prep(const FlattenedMatrix& f);

}  // namespace vqsvd
