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
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vqsvd/bench.hpp"

namespace {

// Accepts "1,2,3", "2..5" (inclusive) or a single number.
std::vector<std::size_t> parse_size_list(const std::string& text) {
    std::vector<std::size_t> out;
    const auto range_pos = text.find("..");
    if (range_pos != std::string::npos) {
        const std::size_t lo = std::stoull(text.substr(0, range_pos));
        const std::size_t hi = std::stoull(text.substr(range_pos + 2));
        if (hi < lo) {
            throw std::invalid_argument("range '" + text + "' is descending");
        }
        for (std::size_t v = lo; v <= hi; ++v) {
            out.push_back(v);
        }
        return out;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const std::string item = text.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!item.empty()) {
            out.push_back(std::stoull(item));
        }
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    if (out.empty()) {
        throw std::invalid_argument("empty list '" + text + "'");
    }
    return out;
}

std::vector<vqsvd::ObjectiveKind> parse_objectives(const std::string& text) {
    if (text == "modified") {
        return {vqsvd::ObjectiveKind::Modified};
    }
    if (text == "original") {
        return {vqsvd::ObjectiveKind::Original};
    }
    if (text == "both") {
        return {vqsvd::ObjectiveKind::Modified, vqsvd::ObjectiveKind::Original};
    }
    throw std::invalid_argument("objective must be modified, original or both");
}

vqsvd::Backend parse_backend(const std::string& text) {
    if (text == "novel") {
        return vqsvd::Backend::NovelBlockEncoding;
    }
    if (text == "pauli") {
        return vqsvd::Backend::PauliHadamard;
    }
    throw std::invalid_argument("backend must be novel or pauli");
}

int execute(const vqsvd::BenchmarkConfig& config, const std::string& out_dir) {
    const vqsvd::BenchmarkOutput output = vqsvd::run_benchmark(config);
    vqsvd::write_outputs(output, out_dir);
    std::cout << "wrote " << output.records.size() << " records ("
              << output.excluded << " excluded) to " << out_dir << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"benchmark harness for the variational singular value toolkit"};
    app.require_subcommand(1);

    std::string n_list = "1,2,3";
    std::string t_range = "auto";
    std::string layers = "2,3,4,5";
    std::string objective = "modified";
    std::string backend = "novel";
    std::string out_dir = "bench_out";
    std::string image_file = "digits.csv";
    std::size_t matrices = 10;
    std::size_t seeds = 10;
    std::size_t count = 20;
    std::uint64_t rng_seed = 0;

    CLI::App* random_cmd =
        app.add_subcommand("random", "sweep over random matrices with entries in [0,1)");
    random_cmd->add_option("--n", n_list, "qubit counts, e.g. 1,2,3")
        ->capture_default_str();
    random_cmd->add_option("--t-range", t_range, "T values: auto, a..b or a list")
        ->capture_default_str();
    random_cmd->add_option("--layers", layers, "ansatz depths, list or a..b")
        ->capture_default_str();
    random_cmd->add_option("--objective", objective, "modified, original or both")
        ->capture_default_str();
    random_cmd->add_option("--backend", backend, "novel or pauli")
        ->capture_default_str();
    random_cmd->add_option("--matrices", matrices, "matrices per size")
        ->capture_default_str();
    random_cmd->add_option("--seeds", seeds, "initial-parameter seeds per matrix")
        ->capture_default_str();
    random_cmd->add_option("--rng-seed", rng_seed, "master seed")->capture_default_str();
    random_cmd->add_option("--out", out_dir, "output directory")->capture_default_str();

    std::string img_t_range = "3..8";
    std::string img_layers = "2..5";
    std::string img_objective = "both";
    CLI::App* images_cmd =
        app.add_subcommand("images", "sweep over 8x8 digit images from a CSV file");
    images_cmd->add_option("--file", image_file, "CSV with 64 pixel values per row")
        ->capture_default_str();
    images_cmd->add_option("--count", count, "number of images to use")
        ->capture_default_str();
    images_cmd->add_option("--t-range", img_t_range, "T values: auto, a..b or a list")
        ->capture_default_str();
    images_cmd->add_option("--layers", img_layers, "ansatz depths, list or a..b")
        ->capture_default_str();
    images_cmd->add_option("--objective", img_objective, "modified, original or both")
        ->capture_default_str();
    images_cmd->add_option("--backend", backend, "novel or pauli")
        ->capture_default_str();
    images_cmd->add_option("--seeds", seeds, "initial-parameter seeds per image")
        ->capture_default_str();
    images_cmd->add_option("--rng-seed", rng_seed, "master seed")->capture_default_str();
    images_cmd->add_option("--out", out_dir, "output directory")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        vqsvd::BenchmarkConfig config;
        config.backend = parse_backend(backend);
        config.seeds_per_matrix = seeds;
        config.rng_seed = rng_seed;

        if (random_cmd->parsed()) {
            config.mode = vqsvd::BenchMode::Random;
            config.sizes = parse_size_list(n_list);
            config.t_values =
                (t_range == "auto") ? std::vector<std::size_t>{} : parse_size_list(t_range);
            config.layer_values = parse_size_list(layers);
            config.objectives = parse_objectives(objective);
            config.matrices_per_size = matrices;
        } else {
            config.mode = vqsvd::BenchMode::Images;
            config.image_file = image_file;
            config.matrices_per_size = count;
            config.t_values = (img_t_range == "auto") ? std::vector<std::size_t>{}
                                                      : parse_size_list(img_t_range);
            config.layer_values = parse_size_list(img_layers);
            config.objectives = parse_objectives(img_objective);
        }
        return execute(config, out_dir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
