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

#include "masim/stochastic.hpp"

#include <cmath>
#include <stdexcept>

#include "masim/errors.hpp"

namespace masim
{

namespace
{

constexpr double kPi = 3.14159265358979323846;

void check_model(const RayleighSumModel &model)
{
    if (model.l_r < 1)
        throw std::domain_error("path count must be at least 1");
    if (model.sigma2 <= 0.0)
        throw std::domain_error("total power sigma2 must be positive");
}

void check_t(double t)
{
    if (t < 0.0)
        throw std::domain_error("gain threshold t must be nonnegative");
}

// (2 l_r - 1)!!^{1/l_r} * sigma2 / l_r; log-space beyond l_r = 20 so the
// double factorial cannot overflow.
double small_argument_constant(const RayleighSumModel &model)
{
    const int l = model.l_r;
    double root;
    if (l <= 20)
    {
        double dfact = 1.0;
        for (int k = 3; k <= 2 * l - 1; k += 2)
            dfact *= k;
        root = std::pow(dfact, 1.0 / l);
    }
    else
    {
        double log_dfact = 0.0;
        for (int k = 3; k <= 2 * l - 1; k += 2)
            log_dfact += std::log(static_cast<double>(k));
        root = std::exp(log_dfact / l);
    }
    return model.sigma2 / l * root;
}

// 1 - e^{-x} sum_{k=0}^{n-1} x^k / k!, clamped into [0, 1].
double erlang_cdf(double x, int n)
{
    double term = 1.0;
    double series = 1.0;
    for (int k = 1; k < n; ++k)
    {
        term *= x / k;
        series += term;
    }
    const double f = 1.0 - std::exp(-x) * series;
    if (f < 0.0)
        return 0.0;
    if (f > 1.0)
        return 1.0;
    return f;
}

} // namespace

RegionDiscretization::RegionDiscretization(double side, int density) : a(side), p(density)
{
    if (side < 0.0)
        throw std::domain_error("region side must be nonnegative");
    if (density < 1)
        throw std::domain_error("grid density must be at least 1");
    const double lb_side = std::floor(2.0 * side + 1.0);
    const double ub_side = std::ceil(static_cast<double>(density) * side + 1.0);
    n_lb = static_cast<long>(lb_side) * static_cast<long>(lb_side);
    n_ub = static_cast<long>(ub_side) * static_cast<long>(ub_side);
}

double expected_gain_reference(const RayleighSumModel &model)
{
    check_model(model);
    return model.sigma2;
}

ExpectedGain expected_max_gain(const RayleighSumModel &model)
{
    check_model(model);
    const double value = (1.0 + (model.l_r - 1) * kPi / 4.0) * model.sigma2;
    return ExpectedGain{value, model.l_r <= 3};
}

ExpectedGain relative_snr_gain(const RayleighSumModel &model)
{
    ExpectedGain g = expected_max_gain(model);
    g.value /= model.sigma2;
    return g;
}

double cdf_one(double t, const RayleighSumModel &model)
{
    check_model(model);
    check_t(t);
    return 1.0 - std::exp(-t / model.sigma2);
}

double cdf_two(double t, const RayleighSumModel &model)
{
    check_model(model);
    if (model.l_r != 2)
        throw arity_error("cdf_two requires a two-path model");
    check_t(t);
    const double s2 = model.sigma2;
    const double s = std::sqrt(s2);
    const double f = 1.0 - std::exp(-2.0 * t / s2) -
                     std::sqrt(kPi * t) / s * std::exp(-t / s2) *
                         (1.0 - 2.0 * gaussian_q(std::sqrt(2.0 * t) / s));
    if (f < 0.0)
        return 0.0;
    if (f > 1.0)
        return 1.0;
    return f;
}

double cdf_three_approx(double t, const RayleighSumModel &model)
{
    check_model(model);
    if (model.l_r != 3)
        throw arity_error("cdf_three_approx requires a three-path model");
    check_t(t);
    const double c3 = std::cbrt(15.0) * model.sigma2 / 3.0;
    return erlang_cdf(t / c3, 3);
}

double cdf_multi_ub_approx(double t, const RayleighSumModel &model)
{
    check_model(model);
    check_t(t);
    return erlang_cdf(t / small_argument_constant(model), model.l_r);
}

double outage_probability(double p_t, double delta2, double gamma_th, const RayleighSumModel &model,
                          CdfKind which)
{
    if (p_t <= 0.0 || delta2 <= 0.0)
        throw std::domain_error("powers must be positive");
    if (gamma_th < 0.0)
        throw std::domain_error("SNR threshold must be nonnegative");
    const double t = delta2 * gamma_th / p_t;
    switch (which)
    {
    case CdfKind::one:
        return cdf_one(t, model);
    case CdfKind::two:
        return cdf_two(t, model);
    case CdfKind::three_approx:
        return cdf_three_approx(t, model);
    case CdfKind::multi_ub_approx:
        return cdf_multi_ub_approx(t, model);
    }
    throw std::logic_error("unknown CDF selector");
}

double spatial_correlation(double d, double sigma2)
{
    if (d < 0.0)
        throw std::domain_error("separation must be nonnegative");
    const double u = kPi * 2.0 * d;
    if (u < 1e-8)
        return sigma2;
    return sigma2 * std::sin(u) / u;
}

double harmonic_number(long n)
{
    // Small terms first keeps the sum accurate.
    double h = 0.0;
    for (long k = n; k >= 1; --k)
        h += 1.0 / static_cast<double>(k);
    return h;
}

HarmonicBounds infinite_path_bounds(const RegionDiscretization &disc, double sigma2)
{
    if (sigma2 <= 0.0)
        throw std::domain_error("sigma2 must be positive");
    return HarmonicBounds{sigma2 * harmonic_number(disc.n_lb), sigma2 * harmonic_number(disc.n_ub)};
}

CdfBounds cdf_infinite_bounds(double t, const RegionDiscretization &disc, double sigma2)
{
    if (sigma2 <= 0.0)
        throw std::domain_error("sigma2 must be positive");
    check_t(t);
    const double base = 1.0 - std::exp(-t / sigma2);
    return CdfBounds{std::pow(base, static_cast<double>(disc.n_lb)),
                     std::pow(base, static_cast<double>(disc.n_ub))};
}

double gaussian_q(double t)
{
    return 0.5 * std::erfc(t / std::sqrt(2.0));
}

} // namespace masim
