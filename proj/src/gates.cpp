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

#include "vqsvd/gates.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <utility>

namespace vqsvd {

namespace {

const double kInvSqrt2 = 0.70710678118654752440;

CMatrix mat_h() {
    CMatrix m(2, 2);
    m(0, 0) = kInvSqrt2;
    m(0, 1) = kInvSqrt2;
    m(1, 0) = kInvSqrt2;
    m(1, 1) = -kInvSqrt2;
    return m;
}

CMatrix mat_x() {
    CMatrix m(2, 2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

CMatrix mat_z() {
    CMatrix m(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}

CMatrix mat_ry(double theta) {
    CMatrix m(2, 2);
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    m(0, 0) = c;
    m(0, 1) = -s;
    m(1, 0) = s;
    m(1, 1) = c;
    return m;
}

CMatrix mat_rz(double theta) {
    CMatrix m(2, 2);
    m(0, 0) = std::exp(cplx(0.0, -0.5 * theta));
    m(1, 1) = std::exp(cplx(0.0, 0.5 * theta));
    return m;
}

}  // namespace

GateOp GateOp::h(std::size_t q) { return GateOp{GateKind::H, {q}, {}, {}, std::nullopt}; }

GateOp GateOp::x(std::size_t q) { return GateOp{GateKind::X, {q}, {}, {}, std::nullopt}; }

GateOp GateOp::z(std::size_t q) { return GateOp{GateKind::Z, {q}, {}, {}, std::nullopt}; }

GateOp GateOp::ry(std::size_t q, double theta) {
    return GateOp{GateKind::RY, {q}, {}, {theta}, std::nullopt};
}

GateOp GateOp::rz(std::size_t q, double theta) {
    return GateOp{GateKind::RZ, {q}, {}, {theta}, std::nullopt};
}

GateOp GateOp::cx(std::size_t control, std::size_t target) {
    return GateOp{GateKind::CX, {target}, {control}, {}, std::nullopt};
}

GateOp GateOp::cz(std::size_t control, std::size_t target) {
    return GateOp{GateKind::CZ, {target}, {control}, {}, std::nullopt};
}

GateOp GateOp::cry(std::size_t control, std::size_t target, double theta) {
    return GateOp{GateKind::CRY, {target}, {control}, {theta}, std::nullopt};
}

GateOp GateOp::crz(std::size_t control, std::size_t target, double theta) {
    return GateOp{GateKind::CRZ, {target}, {control}, {theta}, std::nullopt};
}

GateOp GateOp::ch(std::size_t control, std::size_t target) {
    return GateOp{GateKind::CH, {target}, {control}, {}, std::nullopt};
}

GateOp GateOp::ccx(std::size_t control0, std::size_t control1, std::size_t target) {
    return GateOp{GateKind::CCX, {target}, {control0, control1}, {}, std::nullopt};
}

GateOp GateOp::unitary2q(std::size_t high, std::size_t low, CMatrix u) {
    if (u.rows() != 4 || u.cols() != 4) {
        throw std::invalid_argument("unitary2q: matrix must be 4x4");
    }
    return GateOp{GateKind::Unitary2q, {high, low}, {}, {}, std::move(u)};
}

GateOp GateOp::controlled_by(std::size_t q) const {
    GateOp out = *this;
    out.controls.push_back(q);
    return out;
}

GateOp GateOp::inverse() const {
    GateOp out = *this;
    switch (kind) {
        case GateKind::RY:
        case GateKind::RZ:
        case GateKind::CRY:
        case GateKind::CRZ:
            out.params[0] = -params[0];
            break;
        case GateKind::Unitary2q:
            out.matrix = matrix->adjoint();
            break;
        default:
            break;  // self-inverse
    }
    return out;
}

CMatrix GateOp::base_matrix() const {
    switch (kind) {
        case GateKind::H:
        case GateKind::CH:
            return mat_h();
        case GateKind::X:
        case GateKind::CX:
        case GateKind::CCX:
            return mat_x();
        case GateKind::Z:
        case GateKind::CZ:
            return mat_z();
        case GateKind::RY:
        case GateKind::CRY:
            return mat_ry(params[0]);
        case GateKind::RZ:
        case GateKind::CRZ:
            return mat_rz(params[0]);
        case GateKind::Unitary2q:
            return *matrix;
    }
    throw std::logic_error("base_matrix: unknown gate kind");
}

void GateOp::validate(std::size_t num_qubits) const {
    std::set<std::size_t> seen;
    for (std::size_t q : targets) {
        if (q >= num_qubits) {
            throw std::invalid_argument("gate " + name() + ": target qubit out of range");
        }
        if (!seen.insert(q).second) {
            throw std::invalid_argument("gate " + name() + ": duplicate qubit");
        }
    }
    for (std::size_t q : controls) {
        if (q >= num_qubits) {
            throw std::invalid_argument("gate " + name() + ": control qubit out of range");
        }
        if (!seen.insert(q).second) {
            throw std::invalid_argument("gate " + name() + ": duplicate qubit");
        }
    }
    const std::size_t want_targets = (kind == GateKind::Unitary2q) ? 2 : 1;
    if (targets.size() != want_targets) {
        throw std::invalid_argument("gate " + name() + ": wrong target count");
    }
}

std::string GateOp::name() const {
    switch (kind) {
        case GateKind::H:
            return "h";
        case GateKind::X:
            return "x";
        case GateKind::Z:
            return "z";
        case GateKind::RY:
            return "ry";
        case GateKind::RZ:
            return "rz";
        case GateKind::CX:
            return "cx";
        case GateKind::CZ:
            return "cz";
        case GateKind::CRY:
            return "cry";
        case GateKind::CRZ:
            return "crz";
        case GateKind::CH:
            return "ch";
        case GateKind::CCX:
            return "ccx";
        case GateKind::Unitary2q:
            return "unitary2q";
    }
    return "?";
}

}  // namespace vqsvd
