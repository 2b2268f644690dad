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

#include "vqsvd/zorder.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "vqsvd/types.hpp"

namespace vqsvd {

namespace {

// Slack for |entry| <= 1 checks after division by the max modulus, which
// can overshoot by an ulp for complex entries.
const double kUnitSlack = 1e-12;

std::size_t checked_qubit_count(const CMatrix& a, const char* who) {
    if (!a.is_square()) {
        throw std::invalid_argument(std::string(who) + ": matrix must be square");
    }
    const std::size_t n = a.qubit_count();
    if (n == SIZE_MAX || n == 0) {
        throw std::invalid_argument(std::string(who) +
                                    ": dimension must be 2^n with n >= 1");
    }
    return n;
}

}  // namespace

std::uint64_t interleave_index(std::uint64_t i, std::uint64_t j, std::size_t n) {
    if (i >= pow2(n) || j >= pow2(n)) {
        throw std::invalid_argument("interleave_index: index out of range");
    }
    std::uint64_t k = 0;
    for (std::size_t b = 0; b < n; ++b) {
        k |= ((j >> b) & 1) << (2 * b);
        k |= ((i >> b) & 1) << (2 * b + 1);
    }
    return k;
}

std::pair<std::uint64_t, std::uint64_t> deinterleave_index(std::uint64_t k, std::size_t n) {
    if (k >= pow2(2 * n)) {
        throw std::invalid_argument("deinterleave_index: index out of range");
    }
    std::uint64_t i = 0;
    std::uint64_t j = 0;
    for (std::size_t b = 0; b < n; ++b) {
        j |= ((k >> (2 * b)) & 1) << b;
        i |= ((k >> (2 * b + 1)) & 1) << b;
    }
    return {i, j};
}

std::pair<CMatrix, double> scale_matrix(const CMatrix& a) {
    const double peak = a.max_abs();
    if (peak == 0.0) {
        return {a, 1.0};
    }
    CMatrix scaled = a;
    scaled *= cplx(1.0 / peak, 0.0);
    return {scaled, peak};
}

FlattenedMatrix zorder_flatten(const CMatrix& a, double scale) {
    const std::size_t n = checked_qubit_count(a, "zorder_flatten");
    if (a.max_abs() > 1.0 + kUnitSlack) {
        throw std::invalid_argument("zorder_flatten: entries exceed 1; scale the matrix first");
    }
    FlattenedMatrix f;
    f.n = n;
    f.scale = scale;
    f.values.assign(pow2(2 * n), cplx(0.0, 0.0));
    const std::uint64_t dim = pow2(n);
    for (std::uint64_t i = 0; i < dim; ++i) {
        for (std::uint64_t j = 0; j < dim; ++j) {
            f.values[interleave_index(i, j, n)] = a(i, j);
        }
    }
    return f;
}

CMatrix zorder_unflatten(const FlattenedMatrix& f) {
    if (f.values.size() != pow2(2 * f.n)) {
        throw std::invalid_argument("zorder_unflatten: value count is not 4^n");
    }
    const std::uint64_t dim = pow2(f.n);
    CMatrix a(dim, dim);
    for (std::uint64_t i = 0; i < dim; ++i) {
        for (std::uint64_t j = 0; j < dim; ++j) {
            a(i, j) = f.values[interleave_index(i, j, f.n)];
        }
    }
    return a;
}

EncodedMatrixState encode_frqi(const FlattenedMatrix& f) {
    if (f.values.size() != pow2(2 * f.n)) {
        throw std::invalid_argument("encode_frqi: value count is not 4^n");
    }
    const std::uint64_t flat_dim = pow2(2 * f.n);
    const double eta = static_cast<double>(pow2(f.n));

    std::vector<cplx> amps(2 * flat_dim, cplx(0.0, 0.0));
    for (std::uint64_t k = 0; k < flat_dim; ++k) {
        const cplx v = f.values[k];
        const double mag = std::abs(v);
        if (mag > 1.0 + kUnitSlack) {
            throw std::invalid_argument("encode_frqi: |value| exceeds 1");
        }
        const double rest = std::sqrt(std::max(0.0, 1.0 - mag * mag));
        amps[k] = v / eta;
        amps[k + flat_dim] = rest / eta;
    }

    EncodedMatrixState enc;
    enc.state = Statevector::from_amplitudes(2 * f.n + 1, std::move(amps));
    enc.n = f.n;
    enc.aux_width = 1;
    enc.eta = eta;
    return enc;
}

QuantumCircuit compile_state_prep(const FlattenedMatrix& f) {
    if (f.values.size() != pow2(2 * f.n)) {
        throw std::invalid_argument("compile_state_prep: value count is not 4^n");
    }
    const std::size_t dat = 2 * f.n;
    const std::size_t aux = dat;
    QuantumCircuit circuit(dat + 1);
    for (std::size_t q = 0; q < dat; ++q) {
        circuit.add(GateOp::h(q));
    }
    for (std::uint64_t k = 0; k < f.values.size(); ++k) {
        const cplx v = f.values[k];
        if (v.imag() != 0.0) {
            throw std::invalid_argument("compile_state_prep: complex values not supported");
        }
        const double a = v.real();
        if (std::abs(a) > 1.0 + kUnitSlack) {
            throw std::invalid_argument("compile_state_prep: |value| exceeds 1");
        }
        const double theta = 2.0 * std::acos(std::clamp(a, -1.0, 1.0));
        if (theta == 0.0) {
            continue;
        }
        // RY(theta) on aux, controlled on the data register holding k;
        // zero bits are conjugated with X to control on |0>.
        std::vector<std::size_t> zero_bits;
        GateOp rot = GateOp::ry(aux, theta);
        for (std::size_t q = 0; q < dat; ++q) {
            if ((k >> q) & 1) {
                rot = rot.controlled_by(q);
            } else {
                zero_bits.push_back(q);
            }
        }
        for (std::size_t q : zero_bits) {
            circuit.add(GateOp::x(q));
            rot = rot.controlled_by(q);
        }
        circuit.add(rot);
        for (std::size_t q : zero_bits) {
            circuit.add(GateOp::x(q));
        }
    }
    return circuit;
}

}  // namespace vqsvd
