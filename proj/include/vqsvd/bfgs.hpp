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

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace vqsvd {

struct BfgsConfig {
    std::size_t max_iterations = 500;
    double gradient_tolerance = 1e-6;
    double fd_step = 1e-6;  // central finite difference step
    double wolfe_c1 = 1e-4;
    double wolfe_c2 = 0.9;
};

struct BfgsResult {
    std::vector<double> x;
    double value = 0.0;
    std::size_t iterations = 0;
    bool converged = false;
    /// One of "converged", "max_iterations", "line_search_stalled",
    /// "non_finite_objective".
    std::string status;
    /// Objective value at the start point and after each accepted
    /// iterate; strictly decreasing while progress is made.
    std::vector<double> trace;
};

using ObjectiveFn = std::function<double(std::span<const double>)>;

/// Quasi-Newton minimization with the inverse-Hessian BFGS update and a
/// strong-Wolfe line search. Gradients are central finite differences of
/// `f`; the line search probes directional derivatives the same way, so
/// `f` is the only oracle. A non-finite objective value aborts with the
/// partial trace attached.
BfgsResult bfgs_minimize(const ObjectiveFn& f, std::vector<double> x0,
                         const BfgsConfig& config = {});

}  // namespace vqsvd
