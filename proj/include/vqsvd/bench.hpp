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

#include <cstdint>
#include <string>
#include <vector>

#include "vqsvd/matrix.hpp"
#include "vqsvd/vqsvd.hpp"

namespace vqsvd {

enum class BenchMode {
    Random,
    Images,
};

/// Sweep description. In random mode one matrix set is generated per
/// size; in images mode sizes are ignored (8x8 digit images, n = 3) and
/// `matrices_per_size` counts images taken from `image_file`. An empty
/// `t_values` means every T from 1 to 2^n per size.
struct BenchmarkConfig {
    BenchMode mode = BenchMode::Random;
    std::vector<std::size_t> sizes = {1, 2, 3};
    std::vector<std::size_t> t_values;
    std::vector<std::size_t> layer_values = {2, 3, 4, 5};
    std::vector<ObjectiveKind> objectives = {ObjectiveKind::Modified};
    Backend backend = Backend::NovelBlockEncoding;
    std::size_t matrices_per_size = 10;
    std::size_t seeds_per_matrix = 10;
    std::uint64_t rng_seed = 0;
    std::string image_file;
    double image_max = 16.0;
    BfgsConfig optimizer;
};

/// Flat result of one optimization run. `wall_time_seconds` is kept out
/// of the deterministic CSV outputs and written to a separate timing
/// file. `ok == false` marks a failed run that aggregates exclude.
struct RunRecord {
    BenchMode mode = BenchMode::Random;
    std::size_t n = 0;
    std::size_t matrix_id = 0;
    std::size_t seed_id = 0;
    std::size_t t = 0;
    std::size_t layers = 0;
    ObjectiveKind objective = ObjectiveKind::Modified;
    Backend backend = Backend::NovelBlockEncoding;
    double final_objective = 0.0;  // scaled units
    double mse = 0.0;
    double psnr = 0.0;
    bool has_psnr = false;
    std::uint64_t circuit_runs = 0;
    std::size_t iterations = 0;
    bool converged = false;
    bool ok = true;
    std::string status;
    double wall_time_seconds = 0.0;
};

/// Mean and population standard deviation over the ok records of one
/// (mode, n, objective, T, layers) cell.
struct AggregateRow {
    BenchMode mode = BenchMode::Random;
    std::size_t n = 0;
    ObjectiveKind objective = ObjectiveKind::Modified;
    Backend backend = Backend::NovelBlockEncoding;
    std::size_t t = 0;
    std::size_t layers = 0;
    std::size_t count = 0;
    std::size_t excluded = 0;
    double mse_mean = 0.0;
    double mse_std = 0.0;
    double psnr_mean = 0.0;
    double psnr_std = 0.0;
    bool has_psnr = false;
    double objective_mean = 0.0;
    double objective_std = 0.0;
    double runs_mean = 0.0;
    double runs_std = 0.0;
};

struct BenchmarkOutput {
    std::vector<RunRecord> records;     // sorted canonically
    std::vector<VqsvdResult> results;   // parallel to records
    std::vector<AggregateRow> aggregates;
    std::size_t excluded = 0;
};

/// 2^n x 2^n matrix with real entries drawn uniformly from [0, 1);
/// identical for identical (n, seed).
CMatrix gen_random_matrix(std::size_t n, std::uint64_t seed);

/// Reads 8x8 images from a CSV file, one image per row: 64 values in
/// [0, 16] plus an optional trailing label column (ignored). Blank lines
/// are skipped. Throws std::runtime_error naming the offending file line
/// on malformed input.
std::vector<CMatrix> load_digits(const std::string& path);

/// Runs the full grid, one optimize call per (size/image, matrix, seed,
/// T, layers, objective) cell, parallel across cells (BENCH_THREADS caps
/// the pool). Fully deterministic output for a fixed config.
BenchmarkOutput run_benchmark(const BenchmarkConfig& config);

/// Writes runs.csv, aggregates.csv, timings.csv and the plot data files
/// into `output_dir` (created if needed).
void write_outputs(const BenchmarkOutput& output, const std::string& output_dir);

/// Writes {mode}_{metric}_{objective}_{n}.dat files, one per aggregate
/// panel: rows are T values, with mean, mean - std, mean + std columns
/// per layer series. Throws std::invalid_argument on an empty set.
void emit_plot_data(const std::vector<AggregateRow>& aggregates,
                    const std::string& output_dir);

const char* to_string(BenchMode mode);
const char* to_string(ObjectiveKind kind);
const char* to_string(Backend backend);

}  // namespace vqsvd
