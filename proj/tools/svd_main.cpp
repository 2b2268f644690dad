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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vqsvd/jacobi_svd.hpp"
#include "vqsvd/rng.hpp"
#include "vqsvd/types.hpp"
#include "vqsvd/vqsvd.hpp"

namespace {

using json = nlohmann::json;

vqsvd::CMatrix read_matrix_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        std::vector<double> row;
        std::stringstream fields(line);
        std::string cell;
        while (std::getline(fields, cell, ',')) {
            try {
                row.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw std::runtime_error("row " + std::to_string(line_no) +
                                         ": non-numeric value '" + cell + "'");
            }
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw std::runtime_error("row " + std::to_string(line_no) +
                                     ": ragged row width");
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        throw std::runtime_error("matrix file " + path + " is empty");
    }
    vqsvd::CMatrix a(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            a(r, c) = rows[r][c];
        }
    }
    return a;
}

// Embeds the matrix in the top-left corner of the next power-of-two
// square so the quantum pipeline applies to any CSV input.
vqsvd::CMatrix pad_to_power_of_two(const vqsvd::CMatrix& a) {
    std::size_t dim = 1;
    while (dim < a.rows() || dim < a.cols()) {
        dim *= 2;
    }
    if (dim == a.rows() && dim == a.cols()) {
        return a;
    }
    vqsvd::CMatrix padded(dim, dim);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            padded(r, c) = a(r, c);
        }
    }
    return padded;
}

json complex_to_json(const vqsvd::cplx& z) { return json::array({z.real(), z.imag()}); }

json matrix_to_json(const vqsvd::CMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            row.push_back(complex_to_json(m(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"single variational singular value decomposition"};

    std::string matrix_path;
    std::string objective = "modified";
    std::string backend = "novel";
    std::string out_path = "result.json";
    std::size_t t = 1;
    std::size_t layers = 2;
    std::uint64_t seed = 0;

    app.add_option("--matrix", matrix_path, "CSV file with real matrix entries")
        ->required();
    app.add_option("--t", t, "rank cutoff T")->required();
    app.add_option("--layers", layers, "ansatz depth")->capture_default_str();
    app.add_option("--objective", objective, "modified or original")
        ->capture_default_str();
    app.add_option("--backend", backend, "novel or pauli")->capture_default_str();
    app.add_option("--seed", seed, "initial-parameter seed")->capture_default_str();
    app.add_option("--out", out_path, "output JSON file")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        const vqsvd::CMatrix raw = read_matrix_csv(matrix_path);
        const vqsvd::CMatrix a = pad_to_power_of_two(raw);
        const std::size_t n = a.qubit_count();

        vqsvd::ObjectiveConfig config;
        if (objective == "modified") {
            config.kind = vqsvd::ObjectiveKind::Modified;
        } else if (objective == "original") {
            config.kind = vqsvd::ObjectiveKind::Original;
        } else {
            throw std::invalid_argument("objective must be modified or original");
        }
        config.t = t;
        if (backend == "novel") {
            config.backend = vqsvd::Backend::NovelBlockEncoding;
        } else if (backend == "pauli") {
            config.backend = vqsvd::Backend::PauliHadamard;
        } else {
            throw std::invalid_argument("backend must be novel or pauli");
        }

        const vqsvd::AnsatzSpec ansatz{n, layers};
        std::mt19937_64 gen(vqsvd::mix_seed({seed, t, layers, n}));
        std::vector<double> alpha(ansatz.param_count());
        std::vector<double> beta(ansatz.param_count());
        for (double& v : alpha) {
            v = vqsvd::kTwoPi * vqsvd::uniform_double(gen);
        }
        for (double& v : beta) {
            v = vqsvd::kTwoPi * vqsvd::uniform_double(gen);
        }

        const vqsvd::VqsvdResult result =
            vqsvd::optimize(a, config, ansatz, alpha, beta);
        const vqsvd::CMatrix reconstruction = vqsvd::reconstruct(result);
        const vqsvd::Metrics metrics = vqsvd::compute_metrics(a, reconstruction);
        const vqsvd::PhaseFixed phase_fixed = vqsvd::fix_phases(result.sigmas);
        const std::vector<double> reference = vqsvd::singular_values(a);

        json out;
        out["input"] = {{"file", matrix_path},
                        {"rows", raw.rows()},
                        {"cols", raw.cols()},
                        {"padded_dim", a.rows()}};
        out["config"] = {{"t", t},
                         {"layers", layers},
                         {"objective", objective},
                         {"backend", backend},
                         {"seed", seed}};
        out["scale"] = result.scale;
        out["status"] = result.status;
        out["converged"] = result.converged;
        out["iterations"] = result.iterations;
        out["circuit_runs"] = result.circuit_runs;
        out["objective_trace"] = result.objective_trace;
        json sigmas = json::array();
        for (const vqsvd::cplx& s : result.sigmas) {
            sigmas.push_back(complex_to_json(s));
        }
        out["sigmas"] = std::move(sigmas);
        out["magnitudes"] = phase_fixed.magnitudes;
        json phases = json::array();
        for (const vqsvd::cplx& p : phase_fixed.phases) {
            phases.push_back(complex_to_json(p));
        }
        out["phases"] = std::move(phases);
        out["alpha"] = result.alpha;
        out["beta"] = result.beta;
        out["a_rec"] = matrix_to_json(reconstruction);
        out["metrics"] = {{"mse", metrics.mse},
                          {"frobenius_error", metrics.frobenius_error}};
        out["reference_singular_values"] = reference;

        std::ofstream file(out_path);
        if (!file) {
            throw std::runtime_error("cannot write " + out_path);
        }
        file << out.dump(2) << "\n";
        std::cout << "wrote " << out_path << " (objective " << objective << ", T = " << t
                  << ", status " << result.status << ")\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
