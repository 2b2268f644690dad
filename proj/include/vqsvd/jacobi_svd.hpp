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

#include <vector>

#include "vqsvd/matrix.hpp"

namespace vqsvd {

/// A = U diag(sigma) V^dagger with sigma sorted descending, U and V
/// unitary (square matrices of the input's row and column dimension).
struct SvdResult {
    CMatrix u;
    std::vector<double> sigma;
    CMatrix v;
};

/// Full SVD of a complex matrix by one-sided Jacobi rotations. Self
/// contained dense routine; reconstruction error stays below
/// 1e-9 * ||A||_F for well-scaled inputs.
SvdResult jacobi_svd(const CMatrix& a);

/// Just the descending singular values.
std::vector<double> singular_values(const CMatrix& a);

}  // namespace vqsvd
