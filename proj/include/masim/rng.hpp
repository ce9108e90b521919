// SPDX-License-Identifier: Apache-2.0
//
// masim - movable-antenna channel modeling and simulation library
// Copyright (C) 2026 masim contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
//
// Philox4x32-10 counter-based random streams. Every (seed, stream) pair is
// an independent sequence, so parallel workers draw from disjoint streams
// without coordination and results do not depend on scheduling. All
// distributions are generated here explicitly; std:: distributions are
// implementation-defined and would break bit reproducibility.

#ifndef MASIM_RNG_HPP
#define MASIM_RNG_HPP

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>

namespace masim
{

class PhiloxStream
{
  public:
    PhiloxStream(std::uint64_t seed, std::uint64_t stream) : stream_(stream)
    {
        key_[0] = static_cast<std::uint32_t>(seed);
        key_[1] = static_cast<std::uint32_t>(seed >> 32);
    }

    std::uint64_t next_u64()
    {
        if (have_spare_)
        {
            have_spare_ = false;
            return spare_;
        }
        const std::array<std::uint32_t, 4> out = block(counter_++);
        spare_ = static_cast<std::uint64_t>(out[2]) | (static_cast<std::uint64_t>(out[3]) << 32);
        have_spare_ = true;
        return static_cast<std::uint64_t>(out[0]) | (static_cast<std::uint64_t>(out[1]) << 32);
    }

    /// Uniform on the open interval (0, 1); never 0, safe to pass to log().
    double next_unit()
    {
        const std::uint64_t v = next_u64() >> 11; // 53 bits
        return (static_cast<double>(v) + 0.5) * 0x1.0p-53;
    }

    double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

    /// Standard normal pair via Box-Muller (branch-free, deterministic
    /// two-uniform consumption).
    std::array<double, 2> next_normal_pair()
    {
        const double u1 = next_unit();
        const double u2 = next_unit();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.28318530717958647692528676656 * u2;
        return {r * std::cos(a), r * std::sin(a)};
    }

    /// Circularly symmetric complex Gaussian with E{|z|^2} = variance.
    std::complex<double> next_cscg(double variance)
    {
        const auto [x, y] = next_normal_pair();
        const double s = std::sqrt(variance / 2.0);
        return {s * x, s * y};
    }

  private:
    static std::uint32_t mulhi(std::uint32_t a, std::uint32_t b)
    {
        return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) >> 32);
    }

    std::array<std::uint32_t, 4> block(std::uint64_t counter) const
    {
        constexpr std::uint32_t m0 = 0xD2511F53u;
        constexpr std::uint32_t m1 = 0xCD9E8D57u;
        constexpr std::uint32_t w0 = 0x9E3779B9u;
        constexpr std::uint32_t w1 = 0xBB67AE85u;

        std::array<std::uint32_t, 4> c = {
            static_cast<std::uint32_t>(counter), static_cast<std::uint32_t>(counter >> 32),
            static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32)};
        std::uint32_t k0 = key_[0];
        std::uint32_t k1 = key_[1];
        for (int round = 0; round < 10; ++round)
        {
            const std::uint32_t hi0 = mulhi(m0, c[0]);
            const std::uint32_t lo0 = m0 * c[0];
            const std::uint32_t hi1 = mulhi(m1, c[2]);
            const std::uint32_t lo1 = m1 * c[2];
            c = {hi1 ^ c[1] ^ k0, lo1, hi0 ^ c[3] ^ k1, lo0};
            k0 += w0;
            k1 += w1;
        }
        return c;
    }

    std::array<std::uint32_t, 2> key_{};
    std::uint64_t stream_ = 0;
    std::uint64_t counter_ = 0;
    std::uint64_t spare_ = 0;
    bool have_spare_ = false;
};

} // namespace masim

#endif
