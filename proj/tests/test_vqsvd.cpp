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

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "vqsvd/ansatz.hpp"
#include "vqsvd/jacobi_svd.hpp"
#include "vqsvd/matrix.hpp"
#include "vqsvd/objective.hpp"
#include "vqsvd/types.hpp"

namespace {

using vqsvd::AnsatzSpec;
using vqsvd::cplx;
using vqsvd::CMatrix;
using vqsvd::ObjectiveConfig;
using vqsvd::ObjectiveKind;
using vqsvd::VqsvdResult;

CMatrix random_cmatrix(std::size_t dim, std::mt19937_64& gen) {
    CMatrix m(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            m(r, c) = oracle::random_complex(gen);
        }
    }
    return m;
}

std::vector<double> random_params(std::size_t count, std::mt19937_64& gen) {
    std::vector<double> p(count);
    for (double& v : p) {
        v = oracle::uniform(gen) * vqsvd::kTwoPi;
    }
    return p;
}

/// Builds a result at arbitrary (non-optimized) parameters so the
/// algebraic identities can be probed pointwise.
VqsvdResult result_at(const CMatrix& a, const ObjectiveConfig& config,
                      const AnsatzSpec& spec, std::vector<double> alpha,
                      std::vector<double> beta) {
    VqsvdResult r;
    r.alpha = std::move(alpha);
    r.beta = std::move(beta);
    r.objective = config;
    r.ansatz = spec;
    r.sigmas = vqsvd::extract_sigmas(a, r);
    return r;
}

/// Reconstruction error obeys 2^{2n} MSE == ||A||_F^2 - f_T at every
/// parameter point, where f_T is the sum of squared magnitudes of the
/// kept diagonal elements in the original (unscaled) units.
TEST(VqsvdIdentityTest, MseTiesToObjectiveEverywhere) {
    std::mt19937_64 gen(2024);
    for (std::size_t n = 1; n <= 2; ++n) {
        for (std::size_t t = 1; t <= vqsvd::pow2(n); ++t) {
            const CMatrix a = random_cmatrix(std::size_t{1} << n, gen);
            const AnsatzSpec spec{n, 2};
            ObjectiveConfig config;
            config.kind = ObjectiveKind::Modified;
            config.t = t;
            const VqsvdResult r = result_at(a, config, spec,
                                            random_params(spec.param_count(), gen),
                                            random_params(spec.param_count(), gen));
            double f_t = 0.0;
            for (const cplx& s : r.sigmas) {
                f_t += std::norm(s);
            }
            const CMatrix rec = vqsvd::reconstruct(r);
            const vqsvd::Metrics m = vqsvd::compute_metrics(a, rec);
            const double frob_sq = a.frobenius_norm() * a.frobenius_norm();
            const double lhs = std::pow(2.0, 2.0 * static_cast<double>(n)) * m.mse;
            EXPECT_NEAR(lhs, frob_sq - f_t, 1e-9) << "n=" << n << " t=" << t;
        }
    }
}

TEST(VqsvdOptimizeTest, TinyMatrixConvergesToSpectralMass) {
    std::mt19937_64 gen(7);
    const CMatrix a = random_cmatrix(2, gen);
    const AnsatzSpec spec{1, 4};
    ObjectiveConfig config;
    config.kind = ObjectiveKind::Modified;
    config.t = 2;
    double best = -1.0;
    VqsvdResult best_result;
    for (int seed = 0; seed < 3; ++seed) {
        const VqsvdResult r =
            vqsvd::optimize(a, config, spec, random_params(spec.param_count(), gen),
                            random_params(spec.param_count(), gen));
        double f_t = 0.0;
        for (const cplx& s : r.sigmas) {
            f_t += std::norm(s);
        }
        if (f_t > best) {
            best = f_t;
            best_result = r;
        }
    }
    // With T == dim the full spectral mass ||A||_F^2 is attainable.
    const double frob_sq = a.frobenius_norm() * a.frobenius_norm();
    EXPECT_GT(best, 0.99 * frob_sq);
    // At the optimum the kept magnitudes approximate the singular values.
    const std::vector<double> sigma = vqsvd::singular_values(a);
    const vqsvd::PhaseFixed fixed = vqsvd::fix_phases(best_result.sigmas);
    std::vector<double> mags = fixed.magnitudes;
    std::sort(mags.rbegin(), mags.rend());
    EXPECT_NEAR(mags[0], sigma[0], 0.05 * sigma[0] + 1e-3);
}

TEST(VqsvdOptimizeTest, RunAccountingInvariant) {
    std::mt19937_64 gen(8);
    const CMatrix a = random_cmatrix(2, gen);
    const AnsatzSpec spec{1, 2};
    for (ObjectiveKind kind : {ObjectiveKind::Modified, ObjectiveKind::Original}) {
        ObjectiveConfig config;
        config.kind = kind;
        config.t = 2;
        const vqsvd::ObjectiveEvaluator evaluator(a, config, spec);
        const VqsvdResult r =
            vqsvd::optimize(a, config, spec, random_params(spec.param_count(), gen),
                            random_params(spec.param_count(), gen));
        // Total = (some number of objective evaluations) * runs-per-eval
        // plus the final diagonal readout.
        ASSERT_GT(r.circuit_runs, evaluator.sigma_extraction_runs());
        EXPECT_EQ((r.circuit_runs - evaluator.sigma_extraction_runs()) %
                      evaluator.runs_per_objective(),
                  0u);
    }
}

TEST(VqsvdOptimizeTest, TraceIsNonDecreasingAndEndsAtReportedValue) {
    std::mt19937_64 gen(9);
    const CMatrix a = random_cmatrix(2, gen);
    const AnsatzSpec spec{1, 3};
    ObjectiveConfig config;
    config.t = 1;
    const VqsvdResult r =
        vqsvd::optimize(a, config, spec, random_params(spec.param_count(), gen),
                        random_params(spec.param_count(), gen));
    ASSERT_FALSE(r.objective_trace.empty());
    for (std::size_t i = 1; i < r.objective_trace.size(); ++i) {
        EXPECT_GE(r.objective_trace[i], r.objective_trace[i - 1] - 1e-12);
    }
}

TEST(VqsvdOptimizeTest, DeterministicGivenSameInputs) {
    std::mt19937_64 gen(10);
    const CMatrix a = random_cmatrix(2, gen);
    const AnsatzSpec spec{1, 2};
    ObjectiveConfig config;
    config.t = 2;
    const std::vector<double> alpha = random_params(spec.param_count(), gen);
    const std::vector<double> beta = random_params(spec.param_count(), gen);
    const VqsvdResult r1 = vqsvd::optimize(a, config, spec, alpha, beta);
    const VqsvdResult r2 = vqsvd::optimize(a, config, spec, alpha, beta);
    EXPECT_EQ(r1.alpha, r2.alpha);
    EXPECT_EQ(r1.beta, r2.beta);
    EXPECT_EQ(r1.circuit_runs, r2.circuit_runs);
    EXPECT_EQ(r1.iterations, r2.iterations);
    ASSERT_EQ(r1.sigmas.size(), r2.sigmas.size());
    for (std::size_t i = 0; i < r1.sigmas.size(); ++i) {
        EXPECT_EQ(r1.sigmas[i], r2.sigmas[i]);
    }
}

TEST(VqsvdOptimizeTest, SigmasReportedInOriginalUnits) {
    std::mt19937_64 gen(11);
    CMatrix a = random_cmatrix(2, gen);
    a *= cplx(50.0, 0.0);  // far outside the unit disc
    const AnsatzSpec spec{1, 2};
    ObjectiveConfig config;
    config.t = 2;
    const std::vector<double> alpha = random_params(spec.param_count(), gen);
    const std::vector<double> beta = random_params(spec.param_count(), gen);
    const VqsvdResult r = vqsvd::optimize(a, config, spec, alpha, beta);
    // Dense cross-check of the diagonal elements without any scaling.
    const CMatrix wa = vqsvd::ansatz_matrix(spec, r.alpha);
    const CMatrix wb = vqsvd::ansatz_matrix(spec, r.beta);
    const CMatrix m = wa.adjoint() * a * wb;
    for (std::uint64_t i = 0; i < 2; ++i) {
        EXPECT_LT(std::abs(r.sigmas[i] - m(i, i)), 1e-8);
    }
    EXPECT_DOUBLE_EQ(r.scale, a.max_abs());
}

TEST(VqsvdOptimizeTest, IdentityMatrixReachesFullSpectralMass) {
    // For A = I2 with T = 2 the optimum is sum of squared singular
    // values = 2, and it is reachable.
    std::mt19937_64 gen(14);
    const CMatrix a = CMatrix::identity(2);
    const AnsatzSpec spec{1, 2};
    ObjectiveConfig config;
    config.kind = ObjectiveKind::Modified;
    config.t = 2;
    double best = 0.0;
    for (int seed = 0; seed < 3; ++seed) {
        const VqsvdResult r =
            vqsvd::optimize(a, config, spec, random_params(spec.param_count(), gen),
                            random_params(spec.param_count(), gen));
        double f = 0.0;
        for (const cplx& s : r.sigmas) {
            f += std::norm(s);
        }
        best = std::max(best, f);
    }
    EXPECT_NEAR(best, 2.0, 1e-6);
}

TEST(VqsvdSigmaTest, ZeroMatrixYieldsZeroSigmas) {
    std::mt19937_64 gen(15);
    const CMatrix a(2, 2);
    ObjectiveConfig config;
    config.t = 2;
    const AnsatzSpec spec{1, 2};
    const VqsvdResult r = result_at(a, config, spec,
                                    random_params(spec.param_count(), gen),
                                    random_params(spec.param_count(), gen));
    for (const cplx& s : r.sigmas) {
        EXPECT_LT(std::abs(s), 1e-12);
    }
}

/// Any diagonal element of W(a)^dg A W(b) is bounded by the operator
/// norm, so no extracted value may exceed the top singular value.
TEST(VqsvdSigmaTest, MagnitudesBoundedByTopSingularValue) {
    std::mt19937_64 gen(16);
    const CMatrix a = random_cmatrix(4, gen);
    const double sigma_top = vqsvd::singular_values(a)[0];
    ObjectiveConfig config;
    config.t = 4;
    const AnsatzSpec spec{2, 3};
    for (int rep = 0; rep < 10; ++rep) {
        const VqsvdResult r = result_at(a, config, spec,
                                        random_params(spec.param_count(), gen),
                                        random_params(spec.param_count(), gen));
        for (const cplx& s : r.sigmas) {
            EXPECT_LE(std::abs(s), sigma_top + 1e-6);
        }
    }
}

TEST(PhaseFixTest, SplitsMagnitudeAndPhase) {
    const std::vector<cplx> sigmas = {cplx(3.0, 4.0), cplx(0.0, 0.0), cplx(-2.0, 0.0)};
    const vqsvd::PhaseFixed fixed = vqsvd::fix_phases(sigmas);
    ASSERT_EQ(fixed.magnitudes.size(), 3u);
    EXPECT_DOUBLE_EQ(fixed.magnitudes[0], 5.0);
    EXPECT_DOUBLE_EQ(fixed.magnitudes[1], 0.0);
    EXPECT_DOUBLE_EQ(fixed.magnitudes[2], 2.0);
    EXPECT_EQ(fixed.phases[1], cplx(1.0, 0.0));  // zero keeps a unit phase
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_NEAR(std::abs(fixed.phases[i]), 1.0, 1e-15);
        EXPECT_LT(std::abs(fixed.phases[i] * fixed.magnitudes[i] - sigmas[i]), 1e-13);
    }
}

TEST(PhaseFixTest, MagnitudeOrderIsStableDescending) {
    const std::vector<cplx> sigmas = {cplx(1.0, 0.0), cplx(0.0, 3.0), cplx(1.0, 0.0),
                                      cplx(2.0, 0.0)};
    const std::vector<std::size_t> order = vqsvd::magnitude_order(sigmas);
    ASSERT_EQ(order.size(), 4u);
    EXPECT_EQ(order[0], 1u);
    EXPECT_EQ(order[1], 3u);
    EXPECT_EQ(order[2], 0u);  // ties keep original relative order
    EXPECT_EQ(order[3], 2u);
}

TEST(ReconstructTest, MatchesDenseOuterProductSum) {
    std::mt19937_64 gen(12);
    const CMatrix a = random_cmatrix(4, gen);
    const AnsatzSpec spec{2, 2};
    ObjectiveConfig config;
    config.t = 3;
    const VqsvdResult r = result_at(a, config, spec,
                                    random_params(spec.param_count(), gen),
                                    random_params(spec.param_count(), gen));
    const CMatrix rec = vqsvd::reconstruct(r);
    const CMatrix wa = vqsvd::ansatz_matrix(spec, r.alpha);
    const CMatrix wb = vqsvd::ansatz_matrix(spec, r.beta);
    CMatrix want(4, 4);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t row = 0; row < 4; ++row) {
            for (std::size_t col = 0; col < 4; ++col) {
                want(row, col) += r.sigmas[i] * wa(row, i) * std::conj(wb(col, i));
            }
        }
    }
    EXPECT_LT(vqsvd::max_abs_diff(rec, want), 1e-12);
}

TEST(MetricsTest, HandComputedValues) {
    CMatrix a(2, 2);
    a(0, 0) = 2.0;
    CMatrix b(2, 2);
    b(0, 0) = 1.0;
    b(1, 1) = cplx(0.0, 2.0);
    // diff = [[1, 0], [0, -2i]]; ||diff||_F^2 = 5; mse = 5/4.
    const vqsvd::Metrics m = vqsvd::compute_metrics(a, b);
    EXPECT_DOUBLE_EQ(m.mse, 1.25);
    EXPECT_DOUBLE_EQ(m.frobenius_error, std::sqrt(5.0));
    EXPECT_FALSE(m.has_psnr);
    const vqsvd::Metrics mi = vqsvd::compute_metrics(a, b, 16.0);
    EXPECT_TRUE(mi.has_psnr);
    EXPECT_NEAR(mi.psnr, 10.0 * std::log10(256.0 / 1.25), 1e-12);
    const vqsvd::Metrics exact = vqsvd::compute_metrics(a, a, 16.0);
    EXPECT_TRUE(std::isinf(exact.psnr));
}

TEST(MetricsTest, RejectsShapeMismatch) {
    EXPECT_THROW(vqsvd::compute_metrics(CMatrix(2, 2), CMatrix(3, 3)),
                 std::invalid_argument);
}

TEST(VqsvdOptimizeTest, RejectsWrongInitLength) {
    std::mt19937_64 gen(13);
    const CMatrix a = random_cmatrix(2, gen);
    ObjectiveConfig config;
    config.t = 1;
    const std::vector<double> good(4, 0.1);
    const std::vector<double> bad(3, 0.1);
    EXPECT_THROW(vqsvd::optimize(a, config, AnsatzSpec{1, 2}, bad, good),
                 std::invalid_argument);
}

}  // namespace
