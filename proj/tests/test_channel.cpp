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

#include <doctest.h>

#include "masim/channel.hpp"
#include "masim/deterministic.hpp"
#include "masim/rng.hpp"
#include "test_util.hpp"

using namespace masim;

namespace
{
constexpr double kPi = 3.14159265358979323846;

// Two equal-amplitude paths (sqrt(2)/2 each) with AoAs (0, pi/2) and
// (pi/3, -pi/2); virtual angles (1, 0) and (-1/2, sqrt(3)/2).
ChannelField two_path_demo_field()
{
    ChannelField f;
    f.eprv = {cdouble(0.7071067811865476, 0.0), cdouble(0.7071067811865476, 0.0)};
    f.virtual_aoas = {virtual_aoa({0.0, kPi / 2}), virtual_aoa({kPi / 3, -kPi / 2})};
    return f;
}
} // namespace

TEST_CASE("virtual_aoa maps physical to virtual angles")
{
    const VirtualAngles a = virtual_aoa({0.0, kPi / 2});
    CHECK(a.varphi == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(a.vartheta == doctest::Approx(0.0).epsilon(1e-12));

    const VirtualAngles b = virtual_aoa({kPi / 3, -kPi / 2});
    CHECK(b.varphi == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(b.vartheta == doctest::Approx(0.8660254037844386).epsilon(1e-12));

    const VirtualAngles c = virtual_aoa({kPi / 2, 0.7});
    CHECK(std::abs(c.varphi) < 1e-12);
    CHECK(c.vartheta == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(virtual_aoa({2.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(virtual_aoa({0.0, -2.0}), std::domain_error);
}

TEST_CASE("virtual angles stay inside the unit disk")
{
    PhiloxStream rng(7, 0);
    for (int i = 0; i < 100000; ++i)
    {
        const VirtualAngles v =
            virtual_aoa({rng.next_uniform(-kPi / 2, kPi / 2), rng.next_uniform(-kPi / 2, kPi / 2)});
        CHECK(v.varphi * v.varphi + v.vartheta * v.vartheta <= 1.0 + 1e-12);
    }
}

TEST_CASE("propagation difference is the planar projection")
{
    CHECK(propagation_difference({0, 0}, {0.3, -0.4}) == 0.0);
    CHECK(propagation_difference({1, 0}, {1, 0}) == doctest::Approx(1.0));
    CHECK(propagation_difference({0.5, 0.25}, {-0.5, 0.8660254037844386}) ==
          doctest::Approx(-0.25 + 0.21650635094610965).epsilon(1e-12));
}

TEST_CASE("field-response vector phases")
{
    const std::vector<VirtualAngles> three = {{0.1, 0.2}, {-0.3, 0.4}, {0.5, -0.6}};
    const FieldResponseVector at_origin = frv({0, 0}, three);
    REQUIRE(at_origin.phases.size() == 3);
    for (const auto &p : at_origin.phases)
    {
        CHECK(p.real() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(p.imag() == doctest::Approx(0.0).epsilon(1e-12));
    }

    const std::vector<VirtualAngles> one = {{1, 0}};
    const FieldResponseVector half = frv({0.5, 0}, one);
    CHECK(half.phases[0].real() == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(std::abs(half.phases[0].imag()) < 1e-12);

    const std::vector<VirtualAngles> two = {{1, 0}, {0, 1}};
    const FieldResponseVector quarter = frv({0.25, 0.25}, two);
    for (const auto &p : quarter.phases)
    {
        CHECK(std::abs(p.real()) < 1e-12);
        CHECK(p.imag() == doctest::Approx(1.0).epsilon(1e-12));
    }

    CHECK_THROWS_AS(frv({0, 0}, std::span<const VirtualAngles>{}), dimension_error);
}

TEST_CASE("FRV entries are unit modulus everywhere")
{
    PhiloxStream rng(11, 0);
    std::vector<VirtualAngles> v;
    for (int l = 0; l < 6; ++l)
        v.push_back(virtual_aoa({rng.next_uniform(-kPi / 2, kPi / 2), rng.next_uniform(-kPi / 2, kPi / 2)}));
    for (int i = 0; i < 1000; ++i)
    {
        const Position r{rng.next_uniform(-50, 50), rng.next_uniform(-50, 50)};
        for (const auto &p : frv(r, v).phases)
            CHECK(std::abs(std::abs(p) - 1.0) < 1e-12);
    }
}

TEST_CASE("channel coefficient at the reference points sums the PRM")
{
    PathResponseMatrix single(1, 1);
    single.at(0, 0) = cdouble(0.3, 0.4);
    const std::vector<VirtualAngles> vt = {{0.2, 0.1}};
    const std::vector<VirtualAngles> vr = {{-0.4, 0.3}};
    const cdouble h = channel_coefficient({0, 0}, {0, 0}, single, vt, vr);
    CHECK(h.real() == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(h.imag() == doctest::Approx(0.4).epsilon(1e-12));

    PathResponseMatrix quarter(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            quarter.at(i, j) = 0.25;
    const std::vector<VirtualAngles> v2 = {{0.1, 0.2}, {0.3, -0.1}};
    CHECK(channel_coefficient({0, 0}, {0, 0}, quarter, v2, v2).real() ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("channel coefficient single-path hand evaluation")
{
    PathResponseMatrix prm(1, 1);
    prm.at(0, 0) = 1.0;
    const std::vector<VirtualAngles> vt = {{0.0, 0.0}};
    const std::vector<VirtualAngles> vr = {{1.0, 0.0}};
    const cdouble h = channel_coefficient({0, 0}, {0.5, 0}, prm, vt, vr);
    CHECK(h.real() == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(std::abs(h.imag()) < 1e-12);
}

TEST_CASE("channel coefficient checks dimensions")
{
    PathResponseMatrix prm(2, 3);
    const std::vector<VirtualAngles> two = {{0, 0}, {0, 0}};
    const std::vector<VirtualAngles> three = {{0, 0}, {0, 0}, {0, 0}};
    CHECK_THROWS_AS(channel_coefficient({0, 0}, {0, 0}, prm, two, two), dimension_error);
    CHECK_THROWS_AS(channel_coefficient({0, 0}, {0, 0}, prm, three, three), dimension_error);
    CHECK_NOTHROW(channel_coefficient({0, 0}, {0, 0}, prm, three, two));
}

TEST_CASE("reference consistency on random instances")
{
    PhiloxStream rng(3, 0);
    for (int trial = 0; trial < 50; ++trial)
    {
        const std::size_t lr = 1 + static_cast<std::size_t>(rng.next_u64() % 4);
        const std::size_t lt = 1 + static_cast<std::size_t>(rng.next_u64() % 4);
        PathResponseMatrix prm(lr, lt);
        for (std::size_t i = 0; i < lr; ++i)
            for (std::size_t j = 0; j < lt; ++j)
                prm.at(i, j) = rng.next_cscg(1.0);
        std::vector<VirtualAngles> vt(lt), vr(lr);
        for (auto &v : vt)
            v = virtual_aoa({rng.next_uniform(-kPi / 2, kPi / 2), rng.next_uniform(-kPi / 2, kPi / 2)});
        for (auto &v : vr)
            v = virtual_aoa({rng.next_uniform(-kPi / 2, kPi / 2), rng.next_uniform(-kPi / 2, kPi / 2)});
        const cdouble h = channel_coefficient({0, 0}, {0, 0}, prm, vt, vr);
        CHECK(std::abs(h - prm.sum()) < 1e-12);
    }
}

TEST_CASE("effective EPRV")
{
    SUBCASE("row sums at zero phase")
    {
        PathResponseMatrix prm(2, 2);
        prm.at(0, 0) = 1.0;
        prm.at(0, 1) = 2.0;
        prm.at(1, 0) = 3.0;
        prm.at(1, 1) = 4.0;
        const std::vector<VirtualAngles> vt = {{0.3, 0.1}, {-0.2, 0.5}};
        const ChannelField f = effective_eprv(prm, {0, 0}, vt, {{0, 0}, {0, 0}});
        CHECK(std::abs(f.eprv[0] - cdouble(3.0, 0.0)) < 1e-12);
        CHECK(std::abs(f.eprv[1] - cdouble(7.0, 0.0)) < 1e-12);
    }
    SUBCASE("diagonal PRM reproduces its diagonal")
    {
        const std::vector<cdouble> b = {{0.5, 0.1}, {-0.2, 0.3}, {0.0, -0.7}};
        const PathResponseMatrix prm = PathResponseMatrix::diagonal(b);
        const std::vector<VirtualAngles> vt = {{0, 0}, {0, 0}, {0, 0}};
        const ChannelField f = effective_eprv(prm, {0, 0}, vt, {{0, 0}, {0, 0}, {0, 0}});
        for (std::size_t l = 0; l < 3; ++l)
            CHECK(std::abs(f.eprv[l] - b[l]) < 1e-12);
    }
    SUBCASE("transmit phase rotates the EPRV")
    {
        PathResponseMatrix prm(1, 1);
        prm.at(0, 0) = 1.0;
        const std::vector<VirtualAngles> vt = {{1.0, 0.0}};
        const ChannelField f = effective_eprv(prm, {0.25, 0}, vt, {{0, 0}});
        CHECK(std::abs(f.eprv[0] - cdouble(0.0, 1.0)) < 1e-12);
    }
    SUBCASE("dimension mismatch")
    {
        PathResponseMatrix prm(2, 2);
        const std::vector<VirtualAngles> vt = {{0, 0}};
        CHECK_THROWS_AS(effective_eprv(prm, {0, 0}, vt, {{0, 0}, {0, 0}}), dimension_error);
    }
}

TEST_CASE("one-path gain is position independent")
{
    ChannelField f;
    f.eprv = {cdouble(0.6, 0.8)};
    f.virtual_aoas = {{0.3, -0.5}};
    PhiloxStream rng(5, 0);
    for (int i = 0; i < 100; ++i)
    {
        const Position r{rng.next_uniform(-20, 20), rng.next_uniform(-20, 20)};
        CHECK(channel_gain(f, r) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("two-path demo field gains")
{
    const ChannelField f = two_path_demo_field();
    CHECK(channel_gain(f, {0, 0}) == doctest::Approx(2.0).epsilon(1e-12));

    // Half a line spacing along the normal direction lands on a minimum.
    const MaxLineFamily fam = max_line_family(f);
    const double n = std::hypot(fam.dvarphi, fam.dvartheta);
    const Position min_point{0.5 * fam.spacing * fam.dvarphi / n, 0.5 * fam.spacing * fam.dvartheta / n};
    CHECK(channel_gain(f, min_point) == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("gain via EPRV matches |h|^2 via the coefficient route")
{
    PhiloxStream rng(13, 0);
    for (int trial = 0; trial < 200; ++trial)
    {
        const int paths = 1 + static_cast<int>(rng.next_u64() % 5);
        const ChannelField f = test::random_field(rng, paths);
        const PathResponseMatrix prm = PathResponseMatrix::diagonal(f.eprv);
        std::vector<VirtualAngles> vt(paths, VirtualAngles{0, 0});
        const Position r{rng.next_uniform(-5, 5), rng.next_uniform(-5, 5)};
        const cdouble h = channel_coefficient({0, 0}, r, prm, vt, f.virtual_aoas);
        CHECK(channel_gain(f, r) == doctest::Approx(std::norm(h)).epsilon(1e-10));
    }
}

TEST_CASE("snr")
{
    CHECK(snr(1.0, 1.0, 1.0) == doctest::Approx(1.0));
    CHECK(snr(2.0, 4.0, 2.0) == doctest::Approx(4.0));
    CHECK(snr(0.0, 3.0, 0.5) == 0.0);
    CHECK_THROWS_AS(snr(1.0, 1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(snr(1.0, -1.0, 1.0), std::domain_error);
}

TEST_CASE("rician factor")
{
    PathResponseMatrix prm(2, 2);
    prm.at(0, 0) = 1.0;
    CHECK(rician_factor(prm, 0, 0, 1.0) == doctest::Approx(1.0));
    prm.at(0, 0) = 2.0;
    CHECK(rician_factor(prm, 0, 0, 2.0) == doctest::Approx(2.0));
    CHECK_THROWS_AS(rician_factor(prm, 0, 0, 0.0), std::domain_error);
    CHECK_THROWS_AS(rician_factor(prm, 5, 0, 1.0), dimension_error);
}

TEST_CASE("rician factor against a sampled NLoS power")
{
    // Unit-amplitude LoS entry plus three NLoS entries of total variance 0.5
    // gives kappa = 2. The denominator is estimated by its sample mean.
    PhiloxStream rng(17, 0);
    const int n = 200000;
    double nlos_power = 0.0;
    for (int i = 0; i < n; ++i)
    {
        cdouble nlos_sum = 0.0;
        for (int k = 0; k < 3; ++k)
            nlos_sum += rng.next_cscg(0.5 / 3.0);
        nlos_power += std::norm(nlos_sum);
    }
    nlos_power /= n;

    PathResponseMatrix prm(2, 2);
    prm.at(0, 0) = std::polar(1.0, 0.77);
    const double kappa = rician_factor(prm, 0, 0, nlos_power);
    CHECK(kappa == doctest::Approx(2.0).epsilon(0.03));
}
