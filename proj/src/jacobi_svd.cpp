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

#include "vqsvd/jacobi_svd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace vqsvd {

namespace {

const double kSweepTolerance = 1e-14;
const int kMaxSweeps = 60;

cplx column_dot(const CMatrix& w, std::size_t p, std::size_t q) {
    cplx acc(0.0, 0.0);
    for (std::size_t i = 0; i < w.rows(); ++i) {
        acc += std::conj(w(i, p)) * w(i, q);
    }
    return acc;
}

void scale_column(CMatrix& m, std::size_t col, cplx factor) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        m(i, col) *= factor;
    }
}

void rotate_columns(CMatrix& m, std::size_t p, std::size_t q, double c, double s) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const cplx mp = m(i, p);
        const cplx mq = m(i, q);
        m(i, p) = c * mp - s * mq;
        m(i, q) = s * mp + c * mq;
    }
}

// Fills `u` columns [start, u.cols()) with unit vectors orthogonal to the
// columns already present, drawn from the canonical basis.
void complete_orthonormal(CMatrix& u, std::size_t start) {
    const std::size_t dim = u.rows();
    std::size_t next = start;
    for (std::size_t k = 0; k < dim && next < u.cols(); ++k) {
        std::vector<cplx> candidate(dim, cplx(0.0, 0.0));
        candidate[k] = 1.0;
        for (std::size_t c = 0; c < next; ++c) {
            cplx proj(0.0, 0.0);
            for (std::size_t i = 0; i < dim; ++i) {
                proj += std::conj(u(i, c)) * candidate[i];
            }
            for (std::size_t i = 0; i < dim; ++i) {
                candidate[i] -= proj * u(i, c);
            }
        }
        double norm_sqr = 0.0;
        for (const cplx& x : candidate) {
            norm_sqr += std::norm(x);
        }
        if (norm_sqr < 0.25) {
            continue;
        }
        const double inv = 1.0 / std::sqrt(norm_sqr);
        for (std::size_t i = 0; i < dim; ++i) {
            u(i, next) = candidate[i] * inv;
        }
        ++next;
    }
}

SvdResult svd_tall(const CMatrix& a) {
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();

    CMatrix w = a;
    CMatrix v = CMatrix::identity(cols);

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double worst = 0.0;
        for (std::size_t p = 0; p + 1 < cols; ++p) {
            for (std::size_t q = p + 1; q < cols; ++q) {
                const double alpha = column_dot(w, p, p).real();
                const double beta = column_dot(w, q, q).real();
                const cplx gamma_c = column_dot(w, p, q);
                const double gamma_abs = std::abs(gamma_c);
                if (alpha == 0.0 || beta == 0.0 || gamma_abs == 0.0) {
                    continue;
                }
                const double relative = gamma_abs / std::sqrt(alpha * beta);
                worst = std::max(worst, relative);
                if (relative < kSweepTolerance) {
                    continue;
                }
                // Make the pair inner product real and positive, then
                // apply the real Jacobi rotation that diagonalizes the
                // 2x2 Gram block.
                const cplx phase = std::conj(gamma_c) / gamma_abs;
                scale_column(w, q, phase);
                scale_column(v, q, phase);
                const double zeta = (beta - alpha) / (2.0 * gamma_abs);
                const double sign = (zeta >= 0.0) ? 1.0 : -1.0;
                const double t = sign / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                rotate_columns(w, p, q, c, s);
                rotate_columns(v, p, q, c, s);
            }
        }
        if (worst < kSweepTolerance) {
            break;
        }
    }

    std::vector<double> norms(cols, 0.0);
    for (std::size_t j = 0; j < cols; ++j) {
        norms[j] = std::sqrt(column_dot(w, j, j).real());
    }
    std::vector<std::size_t> order(cols);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&norms](std::size_t x, std::size_t y) { return norms[x] > norms[y]; });

    SvdResult out;
    out.sigma.resize(cols);
    out.u = CMatrix(rows, rows);
    out.v = CMatrix(cols, cols);

    double peak = 0.0;
    for (double s : norms) {
        peak = std::max(peak, s);
    }
    const double rank_tol = peak * 1e-13;

    std::size_t filled = 0;
    for (std::size_t j = 0; j < cols; ++j) {
        const std::size_t src = order[j];
        out.sigma[j] = norms[src];
        for (std::size_t i = 0; i < cols; ++i) {
            out.v(i, j) = v(i, src);
        }
        if (norms[src] > rank_tol && filled == j) {
            const double inv = 1.0 / norms[src];
            for (std::size_t i = 0; i < rows; ++i) {
                out.u(i, j) = w(i, src) * inv;
            }
            ++filled;
        }
    }
    complete_orthonormal(out.u, filled);
    return out;
}

}  // namespace

SvdResult jacobi_svd(const CMatrix& a) {
    if (a.rows() >= a.cols()) {
        return svd_tall(a);
    }
    SvdResult swapped = svd_tall(a.adjoint());
    return SvdResult{swapped.v, std::move(swapped.sigma), swapped.u};
}

std::vector<double> singular_values(const CMatrix& a) {
    return jacobi_svd(a).sigma;
}

}  // namespace vqsvd
