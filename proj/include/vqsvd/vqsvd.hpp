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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vqsvd/ansatz.hpp"
#include "vqsvd/bfgs.hpp"
#include "vqsvd/matrix.hpp"
#include "vqsvd/objective.hpp"

namespace vqsvd {

/// Outcome of one variational decomposition run. `sigmas` are the T
/// approximate singular values in index order (not sorted), already
/// multiplied back by `scale`; `objective_trace` stays in scaled units.
struct VqsvdResult {
    std::vector<double> alpha;
    std::vector<double> beta;
    std::vector<cplx> sigmas;
    std::uint64_t circuit_runs = 0;
    std::vector<double> objective_trace;
    double scale = 1.0;
    std::size_t iterations = 0;
    bool converged = false;
    std::string status;
    ObjectiveConfig objective;
    AnsatzSpec ansatz;
};

/// Maximizes the configured objective over (alpha, beta) with BFGS on the
/// negated value, then extracts the sigmas at the optimum. Every
/// objective evaluation, including the finite-difference probes, adds its
/// run cost to circuit_runs; the final extraction adds 2T. Deterministic
/// for fixed inputs.
VqsvdResult optimize(const CMatrix& a, const ObjectiveConfig& config,
                     const AnsatzSpec& ansatz, std::span<const double> init_alpha,
                     std::span<const double> init_beta, const BfgsConfig& opt = {});

/// sigma_i = <i|W(alpha)^dagger A_scaled W(beta)|i> * scale for
/// i = 0..T-1, recomputed from the stored parameters.
std::vector<cplx> extract_sigmas(const CMatrix& a, const VqsvdResult& result);

struct PhaseFixed {
    std::vector<double> magnitudes;
    std::vector<cplx> phases;  // unit moduli; sigma == magnitude * phase
};

/// Splits each sigma into its modulus and a unit phase to absorb into the
/// left singular vector; an exact zero gets phase 1.
PhaseFixed fix_phases(const std::vector<cplx>& sigmas);

/// Indices of `sigmas` sorted by descending modulus (stable).
std::vector<std::size_t> magnitude_order(const std::vector<cplx>& sigmas);

/// Rank-T reconstruction sum_i sigma_i (W(alpha)|i>)(<i|W(beta)^dagger),
/// computed from dense ansatz unitaries in the original matrix units.
CMatrix reconstruct(const VqsvdResult& result);

struct Metrics {
    double mse = 0.0;
    double frobenius_error = 0.0;
    double psnr = 0.0;
    bool has_psnr = false;
};

/// mse = ||A - A_rec||_F^2 / (rows * cols); psnr (decibels) is included
/// when image_max is given, as 10 log10(image_max^2 / mse), infinite when
/// mse == 0.
Metrics compute_metrics(const CMatrix& a, const CMatrix& a_rec,
                        std::optional<double> image_max = std::nullopt);

}  // namespace vqsvd
