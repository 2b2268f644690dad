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

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "vqsvd/matrix.hpp"
#include "vqsvd/types.hpp"

namespace {

namespace fs = std::filesystem;

using vqsvd::BenchmarkConfig;
using vqsvd::BenchmarkOutput;
using vqsvd::BenchMode;
using vqsvd::CMatrix;
using vqsvd::ObjectiveKind;
using vqsvd::RunRecord;

/// Small deterministic grid that exercises the sweep without long
/// optimizations.
BenchmarkConfig tiny_config() {
    BenchmarkConfig config;
    config.mode = BenchMode::Random;
    config.sizes = {1};
    config.t_values = {1, 2};
    config.layer_values = {1, 2};
    config.objectives = {ObjectiveKind::Modified};
    config.matrices_per_size = 2;
    config.seeds_per_matrix = 2;
    config.rng_seed = 12345;
    config.optimizer.max_iterations = 25;
    return config;
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

bool records_identical(const std::vector<RunRecord>& a, const std::vector<RunRecord>& b) {
    if (a.size() != b.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        const RunRecord& x = a[i];
        const RunRecord& y = b[i];
        if (x.n != y.n || x.matrix_id != y.matrix_id || x.seed_id != y.seed_id ||
            x.t != y.t || x.layers != y.layers || x.objective != y.objective ||
            x.final_objective != y.final_objective || x.mse != y.mse ||
            x.circuit_runs != y.circuit_runs || x.iterations != y.iterations ||
            x.converged != y.converged || x.ok != y.ok || x.status != y.status) {
            return false;
        }
    }
    return true;
}

TEST(GenRandomMatrixTest, DeterministicRealEntriesInUnitInterval) {
    const CMatrix a = vqsvd::gen_random_matrix(2, 99);
    const CMatrix b = vqsvd::gen_random_matrix(2, 99);
    const CMatrix c = vqsvd::gen_random_matrix(2, 100);
    EXPECT_EQ(a.rows(), 4u);
    EXPECT_EQ(vqsvd::max_abs_diff(a, b), 0.0);
    EXPECT_GT(vqsvd::max_abs_diff(a, c), 0.0);
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t col = 0; col < 4; ++col) {
            EXPECT_GE(a(r, col).real(), 0.0);
            EXPECT_LT(a(r, col).real(), 1.0);
            EXPECT_EQ(a(r, col).imag(), 0.0);
        }
    }
    EXPECT_THROW(vqsvd::gen_random_matrix(0, 1), std::invalid_argument);
}

TEST(GenRandomMatrixTest, EmpiricalMeanIsNearHalf) {
    // Uniform [0, 1) entries must average 0.5; 10^4 samples keep the
    // standard error near 0.003, so 0.02 is a loose 6-sigma band.
    double sum = 0.0;
    std::size_t count = 0;
    for (std::uint64_t seed = 0; seed < 625; ++seed) {
        const CMatrix m = vqsvd::gen_random_matrix(2, seed);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            for (std::size_t c = 0; c < m.cols(); ++c) {
                sum += m(r, c).real();
                ++count;
            }
        }
    }
    ASSERT_EQ(count, 10000u);
    EXPECT_NEAR(sum / static_cast<double>(count), 0.5, 0.02);
}

TEST(LoadDigitsTest, ParsesRowsWithOptionalLabel) {
    const fs::path file = fs::temp_directory_path() / "digits_ok.csv";
    {
        std::ofstream out(file);
        // 64 pixel values; second row carries a trailing label column.
        for (int k = 0; k < 64; ++k) {
            out << (k % 17) << (k == 63 ? "\n" : ",");
        }
        out << "\n";  // blank line must be skipped
        for (int k = 0; k < 64; ++k) {
            out << 16 - (k % 17) << ",";
        }
        out << "7\n";
    }
    const std::vector<CMatrix> images = vqsvd::load_digits(file.string());
    ASSERT_EQ(images.size(), 2u);
    EXPECT_EQ(images[0].rows(), 8u);
    EXPECT_EQ(images[0](0, 0), vqsvd::cplx(0.0, 0.0));
    EXPECT_EQ(images[0](0, 1), vqsvd::cplx(1.0, 0.0));
    EXPECT_EQ(images[0](1, 0), vqsvd::cplx(8.0, 0.0));
    // The label (7) must not appear in the image.
    EXPECT_EQ(images[1](7, 7), vqsvd::cplx(16.0 - (63 % 17), 0.0));
}

TEST(LoadDigitsTest, RejectsMalformedRows) {
    const fs::path file = fs::temp_directory_path() / "digits_bad.csv";
    {
        std::ofstream out(file);
        out << "1,2,3\n";
    }
    EXPECT_THROW(vqsvd::load_digits(file.string()), std::runtime_error);
    {
        std::ofstream out(file);
        for (int k = 0; k < 64; ++k) {
            out << (k == 0 ? "99" : "1") << (k == 63 ? "\n" : ",");
        }
    }
    EXPECT_THROW(vqsvd::load_digits(file.string()), std::runtime_error);
    {
        std::ofstream out(file);
        for (int k = 0; k < 64; ++k) {
            out << (k == 5 ? "abc" : "1") << (k == 63 ? "\n" : ",");
        }
    }
    EXPECT_THROW(vqsvd::load_digits(file.string()), std::runtime_error);
    EXPECT_THROW(vqsvd::load_digits("/nonexistent/digits.csv"), std::runtime_error);
}

#ifdef VQSVD_DATA_DIR
TEST(LoadDigitsTest, BundledCorpusRoundTrips) {
    const std::vector<CMatrix> images =
        vqsvd::load_digits(std::string(VQSVD_DATA_DIR) + "/digits.csv");
    ASSERT_EQ(images.size(), 20u);
    for (const CMatrix& img : images) {
        ASSERT_EQ(img.rows(), 8u);
        ASSERT_EQ(img.cols(), 8u);
        for (std::size_t r = 0; r < 8; ++r) {
            for (std::size_t c = 0; c < 8; ++c) {
                EXPECT_GE(img(r, c).real(), 0.0);
                EXPECT_LE(img(r, c).real(), 16.0);
                EXPECT_EQ(img(r, c).imag(), 0.0);
            }
        }
    }
}
#endif

TEST(RunBenchmarkTest, GridShapeAndCanonicalOrder) {
    const BenchmarkOutput out = vqsvd::run_benchmark(tiny_config());
    // 1 size * 1 objective * 2 T * 2 layers * 2 matrices * 2 seeds.
    ASSERT_EQ(out.records.size(), 16u);
    ASSERT_EQ(out.results.size(), 16u);
    for (std::size_t i = 1; i < out.records.size(); ++i) {
        const RunRecord& p = out.records[i - 1];
        const RunRecord& q = out.records[i];
        const auto key = [](const RunRecord& r) {
            return std::tuple(r.n, r.objective == ObjectiveKind::Modified ? 1 : 2, r.t,
                              r.layers, r.matrix_id, r.seed_id);
        };
        EXPECT_LT(key(p), key(q)) << "records must be strictly ordered";
    }
    for (const RunRecord& r : out.records) {
        EXPECT_TRUE(r.ok) << r.status;
        EXPECT_FALSE(r.has_psnr);  // random mode reports no image metric
        EXPECT_GT(r.circuit_runs, 0u);
    }
}

TEST(RunBenchmarkTest, FinalObjectiveMatchesStoredSigmas) {
    // Modified-objective records must satisfy f = sum |sigma_i / scale|^2
    // at the stored optimum, tying the CSV figure to the parallel result.
    const BenchmarkOutput out = vqsvd::run_benchmark(tiny_config());
    ASSERT_EQ(out.results.size(), out.records.size());
    for (std::size_t i = 0; i < out.records.size(); ++i) {
        double f = 0.0;
        for (const vqsvd::cplx& s : out.results[i].sigmas) {
            f += std::norm(s / out.results[i].scale);
        }
        EXPECT_NEAR(out.records[i].final_objective, f, 1e-9) << "record " << i;
    }
}

TEST(RunBenchmarkTest, DeterministicAcrossCallsAndThreadCounts) {
    const BenchmarkOutput first = vqsvd::run_benchmark(tiny_config());
    const BenchmarkOutput second = vqsvd::run_benchmark(tiny_config());
    EXPECT_TRUE(records_identical(first.records, second.records));

    ::setenv("BENCH_THREADS", "4", 1);
    const BenchmarkOutput threaded = vqsvd::run_benchmark(tiny_config());
    ::unsetenv("BENCH_THREADS");
    EXPECT_TRUE(records_identical(first.records, threaded.records));
}

TEST(RunBenchmarkTest, AggregatesMatchHandComputedMoments) {
    const BenchmarkOutput out = vqsvd::run_benchmark(tiny_config());
    for (const vqsvd::AggregateRow& row : out.aggregates) {
        std::vector<double> mse;
        for (const RunRecord& r : out.records) {
            if (r.ok && r.n == row.n && r.t == row.t && r.layers == row.layers &&
                r.objective == row.objective) {
                mse.push_back(r.mse);
            }
        }
        ASSERT_EQ(row.count, mse.size());
        double mean = 0.0;
        for (double v : mse) {
            mean += v;
        }
        mean /= static_cast<double>(mse.size());
        double var = 0.0;
        for (double v : mse) {
            var += (v - mean) * (v - mean);
        }
        var /= static_cast<double>(mse.size());  // population variance
        EXPECT_NEAR(row.mse_mean, mean, 1e-15);
        EXPECT_NEAR(row.mse_std, std::sqrt(var), 1e-12);
    }
}

TEST(RunBenchmarkTest, TValuesFilteredPerSize) {
    BenchmarkConfig config = tiny_config();
    config.t_values = {1, 2, 3, 4};  // n=1 admits only T in {1, 2}
    const BenchmarkOutput out = vqsvd::run_benchmark(config);
    for (const RunRecord& r : out.records) {
        EXPECT_LE(r.t, 2u);
    }
    config.t_values = {9};  // nothing survives the filter
    EXPECT_THROW(vqsvd::run_benchmark(config), std::invalid_argument);
}

TEST(RunBenchmarkTest, AutoTValuesCoverFullRange) {
    BenchmarkConfig config = tiny_config();
    config.t_values.clear();  // auto: 1..2^n
    config.layer_values = {1};
    config.matrices_per_size = 1;
    config.seeds_per_matrix = 1;
    const BenchmarkOutput out = vqsvd::run_benchmark(config);
    ASSERT_EQ(out.records.size(), 2u);
    EXPECT_EQ(out.records[0].t, 1u);
    EXPECT_EQ(out.records[1].t, 2u);
}

TEST(WriteOutputsTest, EmitsCsvAndPlotFiles) {
    const fs::path dir = fresh_dir("vqsvd_bench_out");
    const BenchmarkOutput out = vqsvd::run_benchmark(tiny_config());
    vqsvd::write_outputs(out, dir.string());

    ASSERT_TRUE(fs::exists(dir / "runs.csv"));
    ASSERT_TRUE(fs::exists(dir / "aggregates.csv"));
    ASSERT_TRUE(fs::exists(dir / "timings.csv"));
    ASSERT_TRUE(fs::exists(dir / "random_mse_modified_1.dat"));
    ASSERT_TRUE(fs::exists(dir / "random_runs_modified_1.dat"));

    std::ifstream runs(dir / "runs.csv");
    std::string line;
    std::getline(runs, line);
    EXPECT_EQ(line,
              "mode,n,matrix_id,seed_id,T,layers,objective,backend,status,converged,"
              "iterations,circuit_runs,final_objective,mse,psnr");
    std::size_t rows = 0;
    while (std::getline(runs, line)) {
        ++rows;
    }
    EXPECT_EQ(rows, out.records.size());

    // Plot file: comment header plus one row per T value, each row
    // holding T followed by mean/low/high per layer count.
    std::ifstream plot(dir / "random_mse_modified_1.dat");
    std::getline(plot, line);
    EXPECT_EQ(line, "# T layers1_mean layers1_low layers1_high layers2_mean "
                    "layers2_low layers2_high");
    std::vector<std::string> body;
    while (std::getline(plot, line)) {
        body.push_back(line);
    }
    ASSERT_EQ(body.size(), 2u);
    std::istringstream row(body[0]);
    double t = 0.0, mean = 0.0, low = 0.0, high = 0.0;
    row >> t >> mean >> low >> high;
    EXPECT_EQ(t, 1.0);
    EXPECT_LE(low, mean);
    EXPECT_GE(high, mean);
}

TEST(WriteOutputsTest, TimingsStayOutOfDeterministicFiles) {
    // Wall-clock time varies between runs, so it lives in its own
    // sidecar file and must not leak into runs.csv.
    const fs::path dir = fresh_dir("vqsvd_bench_timing");
    const BenchmarkOutput out = vqsvd::run_benchmark(tiny_config());
    vqsvd::write_outputs(out, dir.string());
    std::ifstream runs(dir / "runs.csv");
    std::string all((std::istreambuf_iterator<char>(runs)),
                    std::istreambuf_iterator<char>());
    EXPECT_EQ(all.find("wall_time"), std::string::npos);
    std::ifstream timings(dir / "timings.csv");
    std::string header;
    std::getline(timings, header);
    EXPECT_NE(header.find("wall_time_seconds"), std::string::npos);
}

TEST(ImagesModeTest, ReportsPeakSignalMetric) {
    const fs::path file = fs::temp_directory_path() / "digits_run.csv";
    {
        std::ofstream out(file);
        for (int k = 0; k < 64; ++k) {
            out << ((3 * k + 1) % 17) << (k == 63 ? "\n" : ",");
        }
    }
    BenchmarkConfig config;
    config.mode = BenchMode::Images;
    config.image_file = file.string();
    config.t_values = {2};
    config.layer_values = {2};
    config.matrices_per_size = 1;
    config.seeds_per_matrix = 1;
    config.optimizer.max_iterations = 12;
    const BenchmarkOutput out = vqsvd::run_benchmark(config);
    ASSERT_EQ(out.records.size(), 1u);
    EXPECT_EQ(out.records[0].n, 3u);
    EXPECT_TRUE(out.records[0].has_psnr);
    EXPECT_TRUE(std::isfinite(out.records[0].psnr));

    const fs::path dir = fresh_dir("vqsvd_bench_images");
    vqsvd::write_outputs(out, dir.string());
    EXPECT_TRUE(fs::exists(dir / "images_psnr_modified_3.dat"));

    // Every reported figure must be recomputable from the stored result:
    // the objective from the sigmas, mse and psnr from the rank-T
    // reconstruction against the known source image.
    const vqsvd::VqsvdResult& res = out.results[0];
    double f = 0.0;
    for (const vqsvd::cplx& s : res.sigmas) {
        f += std::norm(s / res.scale);
    }
    EXPECT_NEAR(out.records[0].final_objective, f, 1e-9);

    const CMatrix image = vqsvd::load_digits(file.string()).at(0);
    const vqsvd::Metrics m =
        vqsvd::compute_metrics(image, vqsvd::reconstruct(res), config.image_max);
    EXPECT_NEAR(out.records[0].mse, m.mse, 1e-9);
    EXPECT_NEAR(out.records[0].psnr, m.psnr, 1e-9);
}

}  // namespace
