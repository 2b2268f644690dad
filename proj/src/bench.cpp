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

#include "vqsvd/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "vqsvd/rng.hpp"
#include "vqsvd/types.hpp"

namespace vqsvd {

namespace {

// Seed-domain tags keeping matrix entries and initial parameters on
// disjoint streams.
constexpr std::uint64_t kTagMatrix = 0x11;
constexpr std::uint64_t kTagInit = 0x22;

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::uint64_t objective_tag(ObjectiveKind kind) {
    return kind == ObjectiveKind::Modified ? 1 : 2;
}

struct Job {
    std::size_t n = 0;
    std::size_t matrix_id = 0;
    std::size_t seed_id = 0;
    std::size_t t = 0;
    std::size_t layers = 0;
    ObjectiveKind objective = ObjectiveKind::Modified;
};

std::size_t worker_count() {
    if (const char* env = std::getenv("BENCH_THREADS")) {
        char* end = nullptr;
        const long parsed = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && parsed >= 1) {
            return static_cast<std::size_t>(parsed);
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

void run_one(const Job& job, const BenchmarkConfig& config, const CMatrix& a,
             RunRecord& record, VqsvdResult& result) {
    record.mode = config.mode;
    record.n = job.n;
    record.matrix_id = job.matrix_id;
    record.seed_id = job.seed_id;
    record.t = job.t;
    record.layers = job.layers;
    record.objective = job.objective;
    record.backend = config.backend;

    const auto start = std::chrono::steady_clock::now();
    try {
        ObjectiveConfig objective;
        objective.kind = job.objective;
        objective.t = job.t;
        objective.backend = config.backend;
        const AnsatzSpec ansatz{job.n, job.layers};

        std::mt19937_64 gen(mix_seed({config.rng_seed, kTagInit, job.n, job.matrix_id,
                                      job.seed_id, job.t, job.layers,
                                      objective_tag(job.objective)}));
        std::vector<double> alpha(ansatz.param_count());
        std::vector<double> beta(ansatz.param_count());
        for (double& v : alpha) {
            v = kTwoPi * uniform_double(gen);
        }
        for (double& v : beta) {
            v = kTwoPi * uniform_double(gen);
        }

        result = optimize(a, objective, ansatz, alpha, beta, config.optimizer);

        record.final_objective =
            result.objective_trace.empty() ? std::nan("") : result.objective_trace.back();
        const CMatrix reconstruction = reconstruct(result);
        const std::optional<double> peak =
            (config.mode == BenchMode::Images) ? std::optional<double>(config.image_max)
                                               : std::nullopt;
        const Metrics metrics = compute_metrics(a, reconstruction, peak);
        record.mse = metrics.mse;
        record.psnr = metrics.psnr;
        record.has_psnr = metrics.has_psnr;
        record.circuit_runs = result.circuit_runs;
        record.iterations = result.iterations;
        record.converged = result.converged;
        record.status = result.status;
        record.ok = (result.status != "non_finite_objective");
    } catch (const std::exception& e) {
        record.ok = false;
        record.status = std::string("error: ") + e.what();
    }
    record.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct Accumulator {
    std::vector<double> mse;
    std::vector<double> psnr;
    std::vector<double> objective;
    std::vector<double> runs;
    std::size_t excluded = 0;
    bool has_psnr = false;
};

std::pair<double, double> mean_std(const std::vector<double>& values) {
    if (values.empty()) {
        return {std::nan(""), std::nan("")};
    }
    const double mean =
        std::accumulate(values.begin(), values.end(), 0.0) / values.size();
    double variance = 0.0;
    for (double v : values) {
        variance += (v - mean) * (v - mean);
    }
    variance /= values.size();  // population convention
    return {mean, std::sqrt(variance)};
}

std::string csv_safe(std::string s) {
    std::replace(s.begin(), s.end(), ',', ';');
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
}

}  // namespace

const char* to_string(BenchMode mode) {
    return mode == BenchMode::Random ? "random" : "images";
}

const char* to_string(ObjectiveKind kind) {
    return kind == ObjectiveKind::Modified ? "modified" : "original";
}

const char* to_string(Backend backend) {
    return backend == Backend::NovelBlockEncoding ? "novel" : "pauli";
}

CMatrix gen_random_matrix(std::size_t n, std::uint64_t seed) {
    if (n == 0) {
        throw std::invalid_argument("gen_random_matrix: n must be positive");
    }
    std::mt19937_64 gen(seed);
    const std::uint64_t dim = pow2(n);
    CMatrix a(dim, dim);
    for (std::uint64_t r = 0; r < dim; ++r) {
        for (std::uint64_t c = 0; c < dim; ++c) {
            a(r, c) = uniform_double(gen);
        }
    }
    return a;
}

std::vector<CMatrix> load_digits(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("load_digits: cannot open " + path);
    }
    std::vector<CMatrix> images;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        std::vector<double> fields;
        std::stringstream row(line);
        std::string cell;
        while (std::getline(row, cell, ',')) {
            try {
                std::size_t used = 0;
                const double value = std::stod(cell, &used);
                while (used < cell.size() &&
                       (cell[used] == ' ' || cell[used] == '\t' || cell[used] == '\r')) {
                    ++used;
                }
                if (used != cell.size()) {
                    throw std::invalid_argument("trailing characters");
                }
                fields.push_back(value);
            } catch (const std::exception&) {
                throw std::runtime_error("load_digits: row " + std::to_string(line_no) +
                                         ": non-numeric value '" + cell + "'");
            }
        }
        if (fields.size() != 64 && fields.size() != 65) {
            throw std::runtime_error("load_digits: row " + std::to_string(line_no) +
                                     ": expected 64 values plus optional label, got " +
                                     std::to_string(fields.size()));
        }
        CMatrix image(8, 8);
        for (std::size_t k = 0; k < 64; ++k) {
            if (fields[k] < 0.0 || fields[k] > 16.0) {
                throw std::runtime_error("load_digits: row " + std::to_string(line_no) +
                                         ": value out of [0, 16]");
            }
            image(k / 8, k % 8) = fields[k];
        }
        images.push_back(std::move(image));
    }
    return images;
}

BenchmarkOutput run_benchmark(const BenchmarkConfig& config) {
    std::vector<std::size_t> sizes;
    std::map<std::size_t, std::vector<CMatrix>> matrices;
    if (config.mode == BenchMode::Random) {
        sizes = config.sizes;
        std::sort(sizes.begin(), sizes.end());
        sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
        if (sizes.empty()) {
            throw std::invalid_argument("run_benchmark: no sizes given");
        }
        for (std::size_t n : sizes) {
            if (n == 0) {
                throw std::invalid_argument("run_benchmark: n must be positive");
            }
            auto& list = matrices[n];
            for (std::size_t id = 0; id < config.matrices_per_size; ++id) {
                list.push_back(
                    gen_random_matrix(n, mix_seed({config.rng_seed, kTagMatrix, n, id})));
            }
        }
    } else {
        const std::vector<CMatrix> images = load_digits(config.image_file);
        if (images.size() < config.matrices_per_size) {
            throw std::runtime_error("run_benchmark: image file has " +
                                     std::to_string(images.size()) +
                                     " images, need " +
                                     std::to_string(config.matrices_per_size));
        }
        sizes = {3};
        matrices[3].assign(images.begin(),
                           images.begin() + static_cast<std::ptrdiff_t>(
                                                config.matrices_per_size));
    }

    if (config.layer_values.empty() || config.objectives.empty() ||
        config.matrices_per_size == 0 || config.seeds_per_matrix == 0) {
        throw std::invalid_argument("run_benchmark: empty grid dimension");
    }

    std::vector<Job> jobs;
    for (std::size_t n : sizes) {
        std::vector<std::size_t> t_list;
        if (config.t_values.empty()) {
            for (std::size_t t = 1; t <= pow2(n); ++t) {
                t_list.push_back(t);
            }
        } else {
            for (std::size_t t : config.t_values) {
                if (t >= 1 && t <= pow2(n)) {
                    t_list.push_back(t);
                }
            }
            std::sort(t_list.begin(), t_list.end());
            t_list.erase(std::unique(t_list.begin(), t_list.end()), t_list.end());
            if (t_list.empty()) {
                throw std::invalid_argument(
                    "run_benchmark: no usable T values for n = " + std::to_string(n));
            }
        }
        for (const ObjectiveKind objective : config.objectives) {
            for (const std::size_t t : t_list) {
                for (const std::size_t layers : config.layer_values) {
                    for (std::size_t matrix_id = 0; matrix_id < config.matrices_per_size;
                         ++matrix_id) {
                        for (std::size_t seed_id = 0; seed_id < config.seeds_per_matrix;
                             ++seed_id) {
                            jobs.push_back(
                                Job{n, matrix_id, seed_id, t, layers, objective});
                        }
                    }
                }
            }
        }
    }

    BenchmarkOutput output;
    output.records.resize(jobs.size());
    output.results.resize(jobs.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t j = next.fetch_add(1);
            if (j >= jobs.size()) {
                return;
            }
            const Job& job = jobs[j];
            run_one(job, config, matrices.at(job.n)[job.matrix_id], output.records[j],
                    output.results[j]);
        }
    };
    const std::size_t pool = std::min(worker_count(), jobs.size());
    if (pool <= 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(pool);
        for (std::size_t i = 0; i < pool; ++i) {
            threads.emplace_back(worker);
        }
        for (std::thread& t : threads) {
            t.join();
        }
    }

    // Canonical emission order, independent of which worker ran what.
    std::vector<std::size_t> order(jobs.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        const RunRecord& a = output.records[x];
        const RunRecord& b = output.records[y];
        return std::make_tuple(a.n, objective_tag(a.objective), a.t, a.layers, a.matrix_id,
                               a.seed_id) < std::make_tuple(b.n, objective_tag(b.objective),
                                                            b.t, b.layers, b.matrix_id,
                                                            b.seed_id);
    });
    {
        std::vector<RunRecord> records;
        std::vector<VqsvdResult> results;
        records.reserve(order.size());
        results.reserve(order.size());
        for (std::size_t idx : order) {
            records.push_back(std::move(output.records[idx]));
            results.push_back(std::move(output.results[idx]));
        }
        output.records = std::move(records);
        output.results = std::move(results);
    }

    std::map<std::tuple<std::size_t, std::uint64_t, std::size_t, std::size_t>, Accumulator>
        cells;
    for (const RunRecord& record : output.records) {
        Accumulator& cell = cells[{record.n, objective_tag(record.objective), record.t,
                                   record.layers}];
        if (!record.ok) {
            ++cell.excluded;
            ++output.excluded;
            continue;
        }
        cell.mse.push_back(record.mse);
        cell.objective.push_back(record.final_objective);
        cell.runs.push_back(static_cast<double>(record.circuit_runs));
        if (record.has_psnr) {
            cell.has_psnr = true;
            cell.psnr.push_back(record.psnr);
        }
    }
    for (const auto& [key, cell] : cells) {
        AggregateRow row;
        row.mode = config.mode;
        row.n = std::get<0>(key);
        row.objective = std::get<1>(key) == 1 ? ObjectiveKind::Modified
                                              : ObjectiveKind::Original;
        row.backend = config.backend;
        row.t = std::get<2>(key);
        row.layers = std::get<3>(key);
        row.count = cell.mse.size();
        row.excluded = cell.excluded;
        std::tie(row.mse_mean, row.mse_std) = mean_std(cell.mse);
        std::tie(row.objective_mean, row.objective_std) = mean_std(cell.objective);
        std::tie(row.runs_mean, row.runs_std) = mean_std(cell.runs);
        row.has_psnr = cell.has_psnr;
        if (cell.has_psnr) {
            std::tie(row.psnr_mean, row.psnr_std) = mean_std(cell.psnr);
        }
        output.aggregates.push_back(row);
    }
    return output;
}

void write_outputs(const BenchmarkOutput& output, const std::string& output_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(output_dir);
    const fs::path dir(output_dir);

    {
        std::ofstream out(dir / "runs.csv");
        out << "mode,n,matrix_id,seed_id,T,layers,objective,backend,status,converged,"
               "iterations,circuit_runs,final_objective,mse,psnr\n";
        for (const RunRecord& r : output.records) {
            out << to_string(r.mode) << ',' << r.n << ',' << r.matrix_id << ','
                << r.seed_id << ',' << r.t << ',' << r.layers << ','
                << to_string(r.objective) << ',' << to_string(r.backend) << ','
                << csv_safe(r.status) << ',' << (r.converged ? 1 : 0) << ','
                << r.iterations << ',' << r.circuit_runs << ','
                << fmt_double(r.final_objective) << ',' << fmt_double(r.mse) << ',';
            if (r.has_psnr) {
                out << fmt_double(r.psnr);
            }
            out << '\n';
        }
    }

    {
        std::ofstream out(dir / "aggregates.csv");
        out << "mode,n,objective,backend,T,layers,count,excluded,mse_mean,mse_std,"
               "psnr_mean,psnr_std,objective_mean,objective_std,runs_mean,runs_std\n";
        for (const AggregateRow& a : output.aggregates) {
            out << to_string(a.mode) << ',' << a.n << ',' << to_string(a.objective) << ','
                << to_string(a.backend) << ',' << a.t << ',' << a.layers << ',' << a.count
                << ',' << a.excluded << ',' << fmt_double(a.mse_mean) << ','
                << fmt_double(a.mse_std) << ',';
            if (a.has_psnr) {
                out << fmt_double(a.psnr_mean) << ',' << fmt_double(a.psnr_std);
            } else {
                out << ',';
            }
            out << ',' << fmt_double(a.objective_mean) << ',' << fmt_double(a.objective_std)
                << ',' << fmt_double(a.runs_mean) << ',' << fmt_double(a.runs_std) << '\n';
        }
    }

    {
        std::ofstream out(dir / "timings.csv");
        out << "mode,n,matrix_id,seed_id,T,layers,objective,backend,wall_time_seconds\n";
        for (const RunRecord& r : output.records) {
            out << to_string(r.mode) << ',' << r.n << ',' << r.matrix_id << ','
                << r.seed_id << ',' << r.t << ',' << r.layers << ','
                << to_string(r.objective) << ',' << to_string(r.backend) << ','
                << fmt_double(r.wall_time_seconds) << '\n';
        }
    }

    emit_plot_data(output.aggregates, output_dir);
}

void emit_plot_data(const std::vector<AggregateRow>& aggregates,
                    const std::string& output_dir) {
    if (aggregates.empty()) {
        throw std::invalid_argument("emit_plot_data: no aggregates");
    }
    namespace fs = std::filesystem;
    fs::create_directories(output_dir);

    struct PanelKey {
        std::string metric;
        std::uint64_t objective;
        std::size_t n;
        BenchMode mode;
        bool operator<(const PanelKey& o) const {
            return std::tie(metric, objective, n, mode) <
                   std::tie(o.metric, o.objective, o.n, o.mode);
        }
    };
    struct Series {
        // (t, layers) -> (mean, std)
        std::map<std::pair<std::size_t, std::size_t>, std::pair<double, double>> values;
    };

    std::map<PanelKey, Series> panels;
    for (const AggregateRow& a : aggregates) {
        const PanelKey base{"", objective_tag(a.objective), a.n, a.mode};
        auto put = [&](const std::string& metric, double mean, double sd) {
            PanelKey key = base;
            key.metric = metric;
            panels[key].values[{a.t, a.layers}] = {mean, sd};
        };
        put("mse", a.mse_mean, a.mse_std);
        put("runs", a.runs_mean, a.runs_std);
        if (a.has_psnr) {
            put("psnr", a.psnr_mean, a.psnr_std);
        }
    }

    for (const auto& [key, series] : panels) {
        std::vector<std::size_t> ts;
        std::vector<std::size_t> layer_list;
        for (const auto& [tl, unused] : series.values) {
            ts.push_back(tl.first);
            layer_list.push_back(tl.second);
        }
        std::sort(ts.begin(), ts.end());
        ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
        std::sort(layer_list.begin(), layer_list.end());
        layer_list.erase(std::unique(layer_list.begin(), layer_list.end()),
                         layer_list.end());

        const std::string objective_name =
            key.objective == 1 ? "modified" : "original";
        const fs::path file = fs::path(output_dir) /
                              (std::string(to_string(key.mode)) + "_" + key.metric + "_" +
                               objective_name + "_" + std::to_string(key.n) + ".dat");
        std::ofstream out(file);
        out << "# T";
        for (std::size_t layers : layer_list) {
            out << " layers" << layers << "_mean layers" << layers << "_low layers"
                << layers << "_high";
        }
        out << '\n';
        for (std::size_t t : ts) {
            out << t;
            for (std::size_t layers : layer_list) {
                const auto it = series.values.find({t, layers});
                if (it == series.values.end()) {
                    out << " nan nan nan";
                } else {
                    const auto [mean, sd] = it->second;
                    out << ' ' << fmt_double(mean) << ' ' << fmt_double(mean - sd) << ' '
                        << fmt_double(mean + sd);
                }
            }
            out << '\n';
        }
    }
}

}  // namespace vqsvd
