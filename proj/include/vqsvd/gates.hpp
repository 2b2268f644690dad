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
#include <optional>
#include <string>
#include <vector>

#include "vqsvd/matrix.hpp"
#include "vqsvd/types.hpp"

namespace vqsvd {

enum class GateKind {
    H,
    X,
    Z,
    RY,
    RZ,
    CX,
    CZ,
    CRY,
    CRZ,
    CH,
    CCX,
    Unitary2q,
};

/// One gate application.
///
/// `targets` carry the base matrix; `controls` gate it on |1> of every
/// listed qubit. Multi-qubit kinds store their own control wire in
/// `controls` (e.g. CX has one target and one control), so kernels only
/// distinguish the base matrix and a control mask.
///
/// Rotation conventions:
///   RY(t) = exp(-i t Y / 2) = [[cos t/2, -sin t/2], [sin t/2, cos t/2]]
///   RZ(t) = diag(e^{-i t/2}, e^{+i t/2})
///
/// For Unitary2q the stored 4x4 matrix acts on the local index
/// 2*b(targets[0]) + b(targets[1]), i.e. targets[0] supplies the more
/// significant local bit.
struct GateOp {
    GateKind kind = GateKind::H;
    std::vector<std::size_t> targets;
    std::vector<std::size_t> controls;
    std::vector<double> params;
    std::optional<CMatrix> matrix;

    static GateOp h(std::size_t q);
    static GateOp x(std::size_t q);
    static GateOp z(std::size_t q);
    static GateOp ry(std::size_t q, double theta);
    static GateOp rz(std::size_t q, double theta);
    static GateOp cx(std::size_t control, std::size_t target);
    static GateOp cz(std::size_t control, std::size_t target);
    static GateOp cry(std::size_t control, std::size_t target, double theta);
    static GateOp crz(std::size_t control, std::size_t target, double theta);
    static GateOp ch(std::size_t control, std::size_t target);
    static GateOp ccx(std::size_t control0, std::size_t control1, std::size_t target);
    static GateOp unitary2q(std::size_t high, std::size_t low, CMatrix u);

    /// Copy of this gate with `q` added as an extra control.
    GateOp controlled_by(std::size_t q) const;

    /// Inverse gate (rotations negate the angle, the rest are involutions
    /// or store the adjoint matrix).
    GateOp inverse() const;

    /// Base matrix on the target qubits only (2x2 or 4x4), controls
    /// excluded.
    CMatrix base_matrix() const;

    /// Throws std::invalid_argument if any wire is out of range or reused.
    void validate(std::size_t num_qubits) const;

    std::string name() const;
};

}  // namespace vqsvd
