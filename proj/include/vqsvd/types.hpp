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

#include <complex>
#include <cstddef>
#include <cstdint>

namespace vqsvd {

using cplx = std::complex<double>;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Returns 2^k as a 64-bit unsigned integer.
inline constexpr std::uint64_t pow2(std::size_t k) { return std::uint64_t{1} << k; }

/// Returns log2(x) if x is a power of two, otherwise SIZE_MAX.
inline constexpr std::size_t log2_exact(std::uint64_t x) {
    if (x == 0 || (x & (x - 1)) != 0) return static_cast<std::size_t>(-1);
    std::size_t k = 0;
    while ((std::uint64_t{1} << k) != x) ++k;
    return k;
}

}  // namespace vqsvd
