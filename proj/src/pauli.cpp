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

#include "vqsvd/pauli.hpp"

#include <cmath>
#include <stdexcept>

#include "vqsvd/types.hpp"

namespace vqsvd {

namespace {

// Column-to-row bit flip and signed value of the single nonzero per
// column, for each 2x2 basis matrix.
struct FactorAction {
    bool flips_bit;
    double value_bit0;
    double value_bit1;
};

FactorAction factor_action(std::uint8_t s) {
    switch (s) {
        case 0:
            return {false, 1.0, 1.0};
        case 1:
            return {true, 1.0, 1.0};
        case 2:
            return {true, -1.0, 1.0};
        case 3:
            return {false, 1.0, -1.0};
        default:
            throw std::invalid_argument("pauli index must be in {0,1,2,3}");
    }
}

// Row index and entry value of the only nonzero in column `col` of P_s.
void string_column(const PauliIndexString& s, std::uint64_t col, std::uint64_t& row,
                   double& value) {
    const std::size_t n = s.size();
    row = col;
    value = 1.0;
    for (std::size_t f = 0; f < n; ++f) {
        const std::size_t q = n - 1 - f;
        const FactorAction act = factor_action(s[f]);
        const bool bit = (col >> q) & 1;
        if (act.flips_bit) {
            row ^= std::uint64_t{1} << q;
        }
        value *= bit ? act.value_bit1 : act.value_bit0;
    }
}

}  // namespace

CMatrix pauli_basis_matrix(std::uint8_t i) {
    CMatrix m(2, 2);
    switch (i) {
        case 0:
            m(0, 0) = 1.0;
            m(1, 1) = 1.0;
            break;
        case 1:
            m(0, 1) = 1.0;
            m(1, 0) = 1.0;
            break;
        case 2:
            m(0, 1) = 1.0;
            m(1, 0) = -1.0;
            break;
        case 3:
            m(0, 0) = 1.0;
            m(1, 1) = -1.0;
            break;
        default:
            throw std::invalid_argument("pauli index must be in {0,1,2,3}");
    }
    return m;
}

CMatrix pauli_string_matrix(const PauliIndexString& s) {
    CMatrix m(1, 1);
    m(0, 0) = 1.0;
    for (std::uint8_t i : s) {
        m = kron(m, pauli_basis_matrix(i));
    }
    return m;
}

PauliCoefficients pauli_decompose(const CMatrix& a, double drop_tolerance) {
    if (!a.is_square()) {
        throw std::invalid_argument("pauli_decompose: matrix must be square");
    }
    const std::size_t n = a.qubit_count();
    if (n == SIZE_MAX) {
        throw std::invalid_argument("pauli_decompose: dimension must be a power of two");
    }
    const std::uint64_t dim = pow2(n);
    const std::uint64_t num_strings = pow2(2 * n);

    PauliCoefficients out;
    out.n = n;
    PauliIndexString s(n, 0);
    for (std::uint64_t t = 0; t < num_strings; ++t) {
        for (std::size_t f = 0; f < n; ++f) {
            s[f] = static_cast<std::uint8_t>((t >> (2 * (n - 1 - f))) & 3);
        }
        cplx trace(0.0, 0.0);
        for (std::uint64_t col = 0; col < dim; ++col) {
            std::uint64_t row = 0;
            double value = 0.0;
            string_column(s, col, row, value);
            trace += value * a(row, col);
        }
        const cplx c = trace / static_cast<double>(dim);
        if (std::abs(c) >= drop_tolerance) {
            out.terms.emplace(s, c);
        }
    }
    return out;
}

CMatrix pauli_reconstruct(const PauliCoefficients& c) {
    const std::uint64_t dim = pow2(c.n);
    CMatrix out(dim, dim);
    for (const auto& [s, coeff] : c.terms) {
        if (s.size() != c.n) {
            throw std::invalid_argument("pauli_reconstruct: index string length mismatch");
        }
        for (std::uint64_t col = 0; col < dim; ++col) {
            std::uint64_t row = 0;
            double value = 0.0;
            string_column(s, col, row, value);
            out(row, col) += coeff * value;
        }
    }
    return out;
}

std::vector<GateOp> pauli_string_gates(const PauliIndexString& s, std::size_t offset) {
    const std::size_t n = s.size();
    std::vector<GateOp> gates;
    for (std::size_t f = 0; f < n; ++f) {
        const std::size_t q = offset + n - 1 - f;
        switch (s[f]) {
            case 0:
                break;
            case 1:
                gates.push_back(GateOp::x(q));
                break;
            case 2:
                gates.push_back(GateOp::ry(q, -0.5 * kTwoPi));
                break;
            case 3:
                gates.push_back(GateOp::z(q));
                break;
            default:
                throw std::invalid_argument("pauli index must be in {0,1,2,3}");
        }
    }
    return gates;
}

}  // namespace vqsvd
