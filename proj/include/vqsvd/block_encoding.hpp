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
#include <vector>

#include "vqsvd/circuit.hpp"
#include "vqsvd/matrix.hpp"
#include "vqsvd/simulator.hpp"
#include "vqsvd/statevector.hpp"
#include "vqsvd/zorder.hpp"

namespace vqsvd {

/// Two-qubit basis change on the pair (high, low), realized as
/// CX(control = high, target = low) then H(high). It maps the four
/// flattened basis-matrix vectors (1,0,0,1)/sqrt(2), (0,1,1,0)/sqrt(2),
/// (0,1,-1,0)/sqrt(2), (1,0,0,-1)/sqrt(2) to basis states 0, 1, 3, 2.
std::vector<GateOp> bell_transform(std::size_t high, std::size_t low);

/// Pairing permutation 0->0, 1->1, 2->3, 3->2 (its own inverse).
std::uint8_t g_map(std::uint8_t i);

/// CX(control = low, target = isr) then CZ(control = high, target = isr):
/// for each i in {0..3}, |g(i)> on the (high, low) pair applies exactly
/// basis matrix P_i to the isr qubit. The X fires before the Z so that
/// i = 2 yields Z X = P_2.
std::vector<GateOp> k_gadget(std::size_t high, std::size_t low, std::size_t isr);

/// bell_transform over every consecutive data pair (2t + 1, 2t),
/// t = 0..n-1.
std::vector<GateOp> bell_layer(std::size_t n);

/// k_gadget from data pair t onto isr qubit 2n + aux_width + t, for
/// t = 0..n-1.
std::vector<GateOp> k_layer(std::size_t n, std::size_t aux_width = 1);

/// The entangled state obtained from the encoded matrix by applying the
/// bell layer on data, `isr_prep` on a fresh |0...0> isr register above
/// the aux qubit, and the k layer. Its overlap with q_reference carries
/// the bilinear form of the encoded matrix.
Statevector build_phi(const EncodedMatrixState& enc, const QuantumCircuit& isr_prep);

/// Fully compiled circuit preparing the same state from |0...0> on
/// registers dat, aux, isr; usable only for real matrices (see
/// compile_state_prep).
QuantumCircuit phi_circuit(const FlattenedMatrix& f, const QuantumCircuit& isr_prep);

/// Reference product state |+>^{2n} (x) |0...0>_aux (x) isr_prep|0>.
Statevector q_reference(const QuantumCircuit& isr_prep, std::size_t aux_width = 1);

/// Circuit preparing q_reference from |0...0>.
QuantumCircuit q_reference_circuit(const QuantumCircuit& isr_prep, std::size_t aux_width = 1);

/// Compiled encoding of one matrix, reusable across isr preparations.
struct BlockEncoding {
    QuantumCircuit phi_circuit;
    std::size_t n = 0;
    std::size_t aux_width = 1;
    double eta = 1.0;

    /// Factor relating the raw overlap <0|Q^dagger|Phi> to the encoded
    /// bilinear form: eta * sqrt(2^n).
    double subnormalization() const;
};

BlockEncoding make_block_encoding(const FlattenedMatrix& f, const QuantumCircuit& isr_prep);

/// <b|M|b> with |b> = psi_prep|0>, extracted as the overlap of build_phi
/// and q_reference times the subnormalization. M must be pre-scaled to
/// max |entry| <= 1; the result is in the scaled units.
cplx expectation_novel(const CMatrix& m, const QuantumCircuit& psi_prep);

/// Bilinear form <a|M|b> with |a> = left_prep|0> on the reference side
/// and |b> = right_prep|0> inside the entangled state.
cplx expectation_novel(const CMatrix& m, const QuantumCircuit& left_prep,
                       const QuantumCircuit& right_prep);

/// Same contraction against an already-encoded state with arbitrary eta:
/// overlap * eta * sqrt(2^n).
cplx expectation_general(const EncodedMatrixState& enc, const QuantumCircuit& left_prep,
                         const QuantumCircuit& right_prep);

/// Re or Im of <a|M|b> via an ancilla Hadamard test between the two
/// compiled preparation circuits. Real matrices only; agrees with
/// expectation_novel.
double expectation_novel_hadamard(const CMatrix& m, const QuantumCircuit& left_prep,
                                  const QuantumCircuit& right_prep, Part part);

/// |<a|M|b>|^2: applies the inverse reference preparation to the
/// entangled state and reads the all-zeros probability times 2^{3n}.
double magnitude_squared_novel(const CMatrix& m, const QuantumCircuit& left_prep,
                               const QuantumCircuit& right_prep);

double magnitude_squared_novel(const CMatrix& m, const QuantumCircuit& psi_prep);

}  // namespace vqsvd
