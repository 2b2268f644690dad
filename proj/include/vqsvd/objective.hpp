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
#include <utility>
#include <vector>

#include "vqsvd/ansatz.hpp"
#include "vqsvd/matrix.hpp"
#include "vqsvd/pauli.hpp"
#include "vqsvd/zorder.hpp"

namespace vqsvd {

enum class ObjectiveKind {
    Original,  // weighted sum of Re<i|W(a)^dg A W(b)|i>
    Modified,  // sum of |<i|W(a)^dg A W(b)|i>|^2
};

enum class Backend {
    PauliHadamard,
    NovelBlockEncoding,
};

/// Training functional over the top T diagonal elements. `weights` apply
/// to the original kind only and default to T + 1 - i (strictly
/// decreasing positive values).
struct ObjectiveConfig {
    ObjectiveKind kind = ObjectiveKind::Modified;
    std::size_t t = 1;
    std::vector<double> weights;
    Backend backend = Backend::NovelBlockEncoding;

    /// Throws std::invalid_argument unless 1 <= t <= 2^n and, for the
    /// original kind, weights (if given) are positive, strictly
    /// decreasing and of length t.
    void validate(std::size_t n) const;

    /// The configured weights, or the T + 1 - i default.
    std::vector<double> effective_weights() const;
};

/// Evaluates matrix elements and objectives for one matrix. The matrix is
/// divided by its peak modulus on construction; matrix elements and
/// objective values are reported in those scaled units, with the divisor
/// available from scale(). The amplitude encoding (novel backend) and the
/// Pauli decomposition (Hadamard-test backend) are cached across calls.
///
/// Circuit-run accounting per objective evaluation: T for the modified
/// kind (one probability readout per element), 2 * T * term_count() for
/// the original kind (a real and an imaginary Hadamard test per Pauli
/// term per element). One full sigma extraction costs 2 * T runs.
class ObjectiveEvaluator {
  public:
    ObjectiveEvaluator(const CMatrix& a, ObjectiveConfig config, AnsatzSpec ansatz);

    /// <i|W(alpha)^dagger A_scaled W(beta)|i>.
    cplx matrix_element(std::span<const double> alpha, std::span<const double> beta,
                        std::uint64_t i) const;

    /// Objective value in scaled units plus the circuit runs consumed.
    std::pair<double, std::uint64_t> objective(std::span<const double> alpha,
                                               std::span<const double> beta) const;

    std::uint64_t runs_per_objective() const;
    std::uint64_t sigma_extraction_runs() const { return 2 * config_.t; }

    double scale() const { return scale_; }
    std::size_t matrix_qubits() const { return n_; }
    std::size_t term_count() const { return terms_.terms.size(); }
    const ObjectiveConfig& config() const { return config_; }
    const AnsatzSpec& ansatz() const { return ansatz_; }
    const CMatrix& scaled_matrix() const { return a_scaled_; }

  private:
    cplx element_pauli(std::span<const double> alpha, std::span<const double> beta,
                       std::uint64_t i) const;
    cplx element_novel(std::span<const double> alpha, std::span<const double> beta,
                       std::uint64_t i) const;

    ObjectiveConfig config_;
    AnsatzSpec ansatz_;
    std::size_t n_ = 0;
    double scale_ = 1.0;
    CMatrix a_scaled_;
    std::vector<double> weights_;
    EncodedMatrixState enc_;
    Statevector enc_bell_;  // encoded state with the bell layer applied
    PauliCoefficients terms_;
};

}  // namespace vqsvd
