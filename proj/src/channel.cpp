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

#include "masim/channel.hpp"

#include <algorithm>

namespace masim
{

Position Region::clamp(const Position &r) const
{
    return Position{std::clamp(r.x, x_min, x_max), std::clamp(r.y, y_min, y_max)};
}

PathResponseMatrix::PathResponseMatrix(std::size_t receive_paths, std::size_t transmit_paths)
    : l_r_(receive_paths), l_t_(transmit_paths), entries_(receive_paths * transmit_paths)
{
    if (l_r_ < 1 || l_t_ < 1)
        throw dimension_error("path-response matrix needs at least one path per side");
}

PathResponseMatrix PathResponseMatrix::diagonal(std::span<const cdouble> b)
{
    PathResponseMatrix prm(b.size(), b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        prm.at(i, i) = b[i];
    return prm;
}

cdouble PathResponseMatrix::sum() const
{
    cdouble acc = 0.0;
    for (const auto &e : entries_)
        acc += e;
    return acc;
}

VirtualAngles virtual_aoa(const PhysicalAngles &angles)
{
    constexpr double half_pi = 1.57079632679489661923 + 1e-12;
    if (std::abs(angles.theta) > half_pi || std::abs(angles.phi) > half_pi)
        throw std::domain_error("physical angles must lie in [-pi/2, pi/2]");
    return VirtualAngles{std::cos(angles.theta) * std::sin(angles.phi), std::sin(angles.theta)};
}

double propagation_difference(const Position &pos, const VirtualAngles &v)
{
    return pos.x * v.varphi + pos.y * v.vartheta;
}

FieldResponseVector frv(const Position &pos, std::span<const VirtualAngles> v_list)
{
    if (v_list.empty())
        throw dimension_error("field-response vector needs at least one path");
    FieldResponseVector out;
    out.phases.reserve(v_list.size());
    for (const auto &v : v_list)
        out.phases.push_back(unit_phasor(propagation_difference(pos, v)));
    return out;
}

cdouble channel_coefficient(const Position &t, const Position &r, const PathResponseMatrix &prm,
                            std::span<const VirtualAngles> tx_v, std::span<const VirtualAngles> rx_v)
{
    if (tx_v.size() != prm.transmit_paths())
        throw dimension_error("transmit angle list does not match PRM columns");
    if (rx_v.size() != prm.receive_paths())
        throw dimension_error("receive angle list does not match PRM rows");

    const FieldResponseVector g = frv(t, tx_v);
    const FieldResponseVector f = frv(r, rx_v);

    cdouble acc = 0.0;
    for (std::size_t i = 0; i < rx_v.size(); ++i)
    {
        cdouble row = 0.0;
        for (std::size_t j = 0; j < tx_v.size(); ++j)
            row += prm.at(i, j) * g.phases[j];
        acc += std::conj(f.phases[i]) * row;
    }
    return acc;
}

ChannelField effective_eprv(const PathResponseMatrix &prm, const Position &t0,
                            std::span<const VirtualAngles> tx_v, std::vector<VirtualAngles> rx_v)
{
    if (tx_v.size() != prm.transmit_paths())
        throw dimension_error("transmit angle list does not match PRM columns");
    if (rx_v.size() != prm.receive_paths())
        throw dimension_error("receive angle list does not match PRM rows");

    const FieldResponseVector g = frv(t0, tx_v);
    ChannelField field;
    field.eprv.resize(prm.receive_paths());
    for (std::size_t i = 0; i < prm.receive_paths(); ++i)
    {
        cdouble row = 0.0;
        for (std::size_t j = 0; j < prm.transmit_paths(); ++j)
            row += prm.at(i, j) * g.phases[j];
        field.eprv[i] = row;
    }
    field.virtual_aoas = std::move(rx_v);
    return field;
}

double channel_gain(const ChannelField &field, const Position &r)
{
    if (field.eprv.size() != field.virtual_aoas.size())
        throw dimension_error("EPRV and virtual AoA lists differ in length");
    cdouble acc = 0.0;
    for (std::size_t l = 0; l < field.paths(); ++l)
        acc += field.eprv[l] * unit_phasor(-propagation_difference(r, field.virtual_aoas[l]));
    return std::norm(acc);
}

double snr(double gain, double p_t, double delta2)
{
    if (delta2 <= 0.0)
        throw std::domain_error("noise power must be positive");
    if (p_t < 0.0)
        throw std::domain_error("transmit power must be nonnegative");
    return gain * p_t / delta2;
}

double rician_factor(const PathResponseMatrix &prm, std::size_t los_row, std::size_t los_col,
                     double nlos_power)
{
    if (los_row >= prm.receive_paths() || los_col >= prm.transmit_paths())
        throw dimension_error("LoS index out of bounds");
    if (nlos_power <= 0.0)
        throw std::domain_error("NLoS power must be positive");
    return std::norm(prm.at(los_row, los_col)) / nlos_power;
}

} // namespace masim
