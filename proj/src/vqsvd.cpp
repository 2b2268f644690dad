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

#include "vqsvd/vqsvd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "vqsvd/types.hpp"

namespace vqsvd {

VqsvdResult optimize(const CMatrix& a, const ObjectiveConfig& config,
                     const AnsatzSpec& ansatz, std::span<const double> init_alpha,
                     std::span<const double> init_beta, const BfgsConfig& opt) {
    const std::size_t p = ansatz.param_count();
    if (init_alpha.size() != p || init_beta.size() != p) {
        throw std::invalid_argument("optimize: initial parameter length mismatch");
    }
    const ObjectiveEvaluator evaluator(a, config, ansatz);

    std::uint64_t circuit_runs = 0;
    const ObjectiveFn negated = [&evaluator, &circuit_runs, p](std::span<const double> x) {
        const auto [value, runs] = evaluator.objective(x.subspan(0, p), x.subspan(p, p));
        circuit_runs += runs;
        return -value;
    };

    std::vector<double> x0(2 * p);
    std::copy(init_alpha.begin(), init_alpha.end(), x0.begin());
    std::copy(init_beta.begin(), init_beta.end(), x0.begin() + p);

    const BfgsResult fit = bfgs_minimize(negated, std::move(x0), opt);

    VqsvdResult result;
    result.alpha.assign(fit.x.begin(), fit.x.begin() + p);
    result.beta.assign(fit.x.begin() + p, fit.x.end());
    result.objective_trace.reserve(fit.trace.size());
    for (double v : fit.trace) {
        result.objective_trace.push_back(-v);
    }
    result.scale = evaluator.scale();
    result.iterations = fit.iterations;
    result.converged = fit.converged;
    result.status = fit.status;
    result.objective = config;
    result.ansatz = ansatz;

    result.sigmas.reserve(config.t);
    for (std::uint64_t i = 0; i < config.t; ++i) {
        result.sigmas.push_back(evaluator.matrix_element(result.alpha, result.beta, i) *
                                evaluator.scale());
    }
    circuit_runs += evaluator.sigma_extraction_runs();
    result.circuit_runs = circuit_runs;
    return result;
}

std::vector<cplx> extract_sigmas(const CMatrix& a, const VqsvdResult& result) {
    const ObjectiveEvaluator evaluator(a, result.objective, result.ansatz);
    std::vector<cplx> sigmas;
    sigmas.reserve(result.objective.t);
    for (std::uint64_t i = 0; i < result.objective.t; ++i) {
        sigmas.push_back(evaluator.matrix_element(result.alpha, result.beta, i) *
                         evaluator.scale());
    }
    return sigmas;
}

PhaseFixed fix_phases(const std::vector<cplx>& sigmas) {
    PhaseFixed out;
    out.magnitudes.reserve(sigmas.size());
    out.phases.reserve(sigmas.size());
    for (const cplx& s : sigmas) {
        const double mag = std::abs(s);
        out.magnitudes.push_back(mag);
        out.phases.push_back(mag == 0.0 ? cplx(1.0, 0.0) : s / mag);
    }
    return out;
}

std::vector<std::size_t> magnitude_order(const std::vector<cplx>& sigmas) {
    std::vector<std::size_t> order(sigmas.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&sigmas](std::size_t x, std::size_t y) {
        return std::abs(sigmas[x]) > std::abs(sigmas[y]);
    });
    return order;
}

CMatrix reconstruct(const VqsvdResult& result) {
    const CMatrix wa = ansatz_matrix(result.ansatz, result.alpha);
    const CMatrix wb = ansatz_matrix(result.ansatz, result.beta);
    const std::uint64_t dim = pow2(result.ansatz.num_qubits);

    CMatrix rec(dim, dim);
    for (std::size_t i = 0; i < result.sigmas.size(); ++i) {
        const cplx sigma = result.sigmas[i];
        for (std::uint64_t r = 0; r < dim; ++r) {
            const cplx left = sigma * wa(r, i);
            for (std::uint64_t c = 0; c < dim; ++c) {
                rec(r, c) += left * std::conj(wb(c, i));
            }
        }
    }
    return rec;
}

Metrics compute_metrics(const CMatrix& a, const CMatrix& a_rec,
                        std::optional<double> image_max) {
    if (a.rows() != a_rec.rows() || a.cols() != a_rec.cols()) {
        throw std::invalid_argument("compute_metrics: dimension mismatch");
    }
    Metrics m;
    const CMatrix diff = a - a_rec;
    m.frobenius_error = diff.frobenius_norm();
    m.mse = (m.frobenius_error * m.frobenius_error) /
            static_cast<double>(a.rows() * a.cols());
    if (image_max.has_value()) {
        m.has_psnr = true;
        m.psnr = (m.mse == 0.0)
                     ? std::numeric_limits<double>::infinity()
                     : 10.0 * std::log10((*image_max) * (*image_max) / m.mse);
    }
    return m;
}

}  // namespace vqsvd
