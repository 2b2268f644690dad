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
#include <vector>

#include "vqsvd/types.hpp"

namespace vqsvd {

/// Dense complex matrix, row-major storage. Matrix indices use the same
/// bit-to-qubit mapping as Statevector: bit q of a row/column index is the
/// state of qubit q.
class CMatrix {
  public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, cplx{0.0, 0.0}) {}

    static CMatrix identity(std::size_t dim);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    /// log2(dim) for a square power-of-two matrix, SIZE_MAX otherwise.
    std::size_t qubit_count() const;

    cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<cplx>& data() const { return data_; }

    CMatrix adjoint() const;

    double frobenius_norm() const;
    double max_abs() const;

    CMatrix& operator+=(const CMatrix& rhs);
    CMatrix& operator-=(const CMatrix& rhs);
    CMatrix& operator*=(cplx s);

    friend CMatrix operator+(CMatrix lhs, const CMatrix& rhs) { return lhs += rhs; }
    friend CMatrix operator-(CMatrix lhs, const CMatrix& rhs) { return lhs -= rhs; }
    friend CMatrix operator*(cplx s, CMatrix m) { return m *= s; }
    friend CMatrix operator*(CMatrix m, cplx s) { return m *= s; }
    friend CMatrix operator*(const CMatrix& lhs, const CMatrix& rhs);

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

/// Kronecker product; the left factor supplies the high-order index bits.
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// y = A x.
std::vector<cplx> matvec(const CMatrix& a, const std::vector<cplx>& x);

/// <x|A|x> for a column vector x.
cplx quadratic_form(const CMatrix& a, const std::vector<cplx>& x);

/// max_ij |a_ij - b_ij|; matrices must have equal shape.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

}  // namespace vqsvd
