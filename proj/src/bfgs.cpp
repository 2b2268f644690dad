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

#include "vqsvd/bfgs.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vqsvd {

namespace {

struct NonFiniteObjective {};

double checked_eval(const ObjectiveFn& f, const std::vector<double>& x) {
    const double value = f(x);
    if (!std::isfinite(value)) {
        throw NonFiniteObjective{};
    }
    return value;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += a[i] * b[i];
    }
    return acc;
}

double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

std::vector<double> fd_gradient(const ObjectiveFn& f, const std::vector<double>& x,
                                double step) {
    std::vector<double> grad(x.size());
    std::vector<double> probe = x;
    for (std::size_t i = 0; i < x.size(); ++i) {
        probe[i] = x[i] + step;
        const double fp = checked_eval(f, probe);
        probe[i] = x[i] - step;
        const double fm = checked_eval(f, probe);
        probe[i] = x[i];
        grad[i] = (fp - fm) / (2.0 * step);
    }
    return grad;
}

class LineProbe {
  public:
    LineProbe(const ObjectiveFn& f, const std::vector<double>& x,
              const std::vector<double>& d, double fd_step)
        : f_(f), x_(x), d_(d) {
        h_ = fd_step / std::max(norm(d), 1e-12);
    }

    double value(double alpha) const {
        std::vector<double> point(x_.size());
        for (std::size_t i = 0; i < x_.size(); ++i) {
            point[i] = x_[i] + alpha * d_[i];
        }
        return checked_eval(f_, point);
    }

    double slope(double alpha) const {
        return (value(alpha + h_) - value(alpha - h_)) / (2.0 * h_);
    }

  private:
    const ObjectiveFn& f_;
    const std::vector<double>& x_;
    const std::vector<double>& d_;
    double h_ = 0.0;
};

struct LineSearchOutcome {
    double alpha = 0.0;
    double value = 0.0;
    bool ok = false;
};

// Strong-Wolfe line search: bracketing stage followed by bisection zoom.
LineSearchOutcome wolfe_search(const LineProbe& probe, double phi0, double dphi0,
                               const BfgsConfig& cfg) {
    const double c1 = cfg.wolfe_c1;
    const double c2 = cfg.wolfe_c2;

    auto zoom = [&](double lo, double phi_lo, double hi) -> LineSearchOutcome {
        for (int i = 0; i < 40; ++i) {
            const double a = 0.5 * (lo + hi);
            const double phi_a = probe.value(a);
            if (phi_a > phi0 + c1 * a * dphi0 || phi_a >= phi_lo) {
                hi = a;
            } else {
                const double dphi_a = probe.slope(a);
                if (std::abs(dphi_a) <= -c2 * dphi0) {
                    return {a, phi_a, true};
                }
                if (dphi_a * (hi - lo) >= 0.0) {
                    hi = lo;
                }
                lo = a;
                phi_lo = phi_a;
            }
            if (std::abs(hi - lo) < 1e-16) {
                break;
            }
        }
        if (phi_lo < phi0) {
            return {lo, phi_lo, true};
        }
        return {};
    };

    double a_prev = 0.0;
    double phi_prev = phi0;
    double a = 1.0;
    const double a_max = 100.0;
    for (int i = 0; i < 30; ++i) {
        const double phi_a = probe.value(a);
        if (phi_a > phi0 + c1 * a * dphi0 || (i > 0 && phi_a >= phi_prev)) {
            return zoom(a_prev, phi_prev, a);
        }
        const double dphi_a = probe.slope(a);
        if (std::abs(dphi_a) <= -c2 * dphi0) {
            return {a, phi_a, true};
        }
        if (dphi_a >= 0.0) {
            return zoom(a, phi_a, a_prev);
        }
        a_prev = a;
        phi_prev = phi_a;
        a = std::min(2.0 * a, a_max);
        if (a_prev == a_max) {
            break;
        }
    }
    if (phi_prev < phi0) {
        return {a_prev, phi_prev, true};
    }
    return {};
}

}  // namespace

BfgsResult bfgs_minimize(const ObjectiveFn& f, std::vector<double> x0,
                         const BfgsConfig& config) {
    const std::size_t p = x0.size();
    if (p == 0) {
        throw std::invalid_argument("bfgs_minimize: empty parameter vector");
    }

    BfgsResult result;
    std::vector<double> x = std::move(x0);
    double fx = 0.0;

    // Inverse Hessian approximation, row-major p x p, starting at identity.
    std::vector<double> h(p * p, 0.0);
    auto reset_h = [&]() {
        std::fill(h.begin(), h.end(), 0.0);
        for (std::size_t i = 0; i < p; ++i) {
            h[i * p + i] = 1.0;
        }
    };
    reset_h();

    try {
        fx = checked_eval(f, x);
        result.trace.push_back(fx);
        std::vector<double> grad = fd_gradient(f, x, config.fd_step);

        for (std::size_t iter = 1; iter <= config.max_iterations; ++iter) {
            if (norm(grad) < config.gradient_tolerance) {
                result.converged = true;
                result.status = "converged";
                break;
            }

            std::vector<double> d(p, 0.0);
            for (std::size_t i = 0; i < p; ++i) {
                for (std::size_t j = 0; j < p; ++j) {
                    d[i] -= h[i * p + j] * grad[j];
                }
            }
            double dphi0 = dot(grad, d);
            if (dphi0 >= 0.0) {
                // Not a descent direction; fall back to steepest descent.
                reset_h();
                for (std::size_t i = 0; i < p; ++i) {
                    d[i] = -grad[i];
                }
                dphi0 = -dot(grad, grad);
            }
            if (dphi0 == 0.0) {
                result.status = "line_search_stalled";
                break;
            }

            const LineProbe probe(f, x, d, config.fd_step);
            const LineSearchOutcome ls = wolfe_search(probe, fx, dphi0, config);
            if (!ls.ok || !(ls.value < fx)) {
                result.status = "line_search_stalled";
                break;
            }

            std::vector<double> x_new(p);
            for (std::size_t i = 0; i < p; ++i) {
                x_new[i] = x[i] + ls.alpha * d[i];
            }
            std::vector<double> grad_new = fd_gradient(f, x_new, config.fd_step);

            std::vector<double> s(p);
            std::vector<double> y(p);
            for (std::size_t i = 0; i < p; ++i) {
                s[i] = x_new[i] - x[i];
                y[i] = grad_new[i] - grad[i];
            }
            const double ys = dot(y, s);
            if (ys > 1e-12) {
                // h <- (I - rho s y^T) h (I - rho y s^T) + rho s s^T
                const double rho = 1.0 / ys;
                std::vector<double> hy(p, 0.0);
                for (std::size_t i = 0; i < p; ++i) {
                    for (std::size_t j = 0; j < p; ++j) {
                        hy[i] += h[i * p + j] * y[j];
                    }
                }
                const double yhy = dot(y, hy);
                for (std::size_t i = 0; i < p; ++i) {
                    for (std::size_t j = 0; j < p; ++j) {
                        h[i * p + j] += -s[i] * rho * hy[j] - hy[i] * rho * s[j] +
                                        rho * rho * yhy * s[i] * s[j] + rho * s[i] * s[j];
                    }
                }
            }

            x = std::move(x_new);
            fx = ls.value;
            grad = std::move(grad_new);
            result.trace.push_back(fx);
            result.iterations = iter;
        }
        if (result.status.empty()) {
            result.status = "max_iterations";
        }
    } catch (const NonFiniteObjective&) {
        result.converged = false;
        result.status = "non_finite_objective";
        if (result.trace.empty()) {
            fx = std::nan("");
        }
    }

    result.x = std::move(x);
    result.value = fx;
    return result;
}

}  // namespace vqsvd
