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
// Field-response channel model for a movable antenna (MA).
//
// All lengths are expressed in wavelength units (multiples of lambda), so
// lambda never appears as a runtime parameter. Angles are in radians. The
// model is the far-field plane-wave one: moving the antenna changes only the
// per-path phases, captured by the field-response vectors.

#ifndef MASIM_CHANNEL_HPP
#define MASIM_CHANNEL_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "masim/errors.hpp"

namespace masim
{

using cdouble = std::complex<double>;

inline constexpr double kTwoPi = 6.28318530717958647692528676656;

/// Antenna position inside a transmit/receive region, in wavelengths.
struct Position
{
    double x = 0.0;
    double y = 0.0;
};

/// Elevation/azimuth angle pair of a propagation path, both in [-pi/2, pi/2].
struct PhysicalAngles
{
    double theta = 0.0; // elevation
    double phi = 0.0;   // azimuth
};

/// Virtual angle pair (cos(theta)sin(phi), sin(theta)). Satisfies
/// varphi^2 + vartheta^2 <= 1 by construction.
struct VirtualAngles
{
    double varphi = 0.0;
    double vartheta = 0.0;
};

/// Rectangular spatial domain, in wavelengths.
struct Region
{
    double x_min = 0.0;
    double x_max = 0.0;
    double y_min = 0.0;
    double y_max = 0.0;

    static Region centered_square(double side)
    {
        return Region{-side / 2.0, side / 2.0, -side / 2.0, side / 2.0};
    }

    bool contains(const Position &r) const
    {
        return r.x >= x_min && r.x <= x_max && r.y >= y_min && r.y <= y_max;
    }

    Position clamp(const Position &r) const;
};

/// Complex path-response matrix between transmit and receive paths, at the
/// reference positions. Row i / column j couples receive path i with
/// transmit path j. Stored row-major.
class PathResponseMatrix
{
  public:
    PathResponseMatrix(std::size_t receive_paths, std::size_t transmit_paths);

    /// One-to-one path correspondence (geometric channel): diag{b_1..b_L}.
    static PathResponseMatrix diagonal(std::span<const cdouble> b);

    std::size_t receive_paths() const noexcept { return l_r_; }
    std::size_t transmit_paths() const noexcept { return l_t_; }

    cdouble &at(std::size_t i, std::size_t j) { return entries_[i * l_t_ + j]; }
    const cdouble &at(std::size_t i, std::size_t j) const { return entries_[i * l_t_ + j]; }

    /// Sum of all entries; the channel between the two reference points.
    cdouble sum() const;

  private:
    std::size_t l_r_;
    std::size_t l_t_;
    std::vector<cdouble> entries_;
};

/// Unit-modulus per-path phase vector at one antenna position.
struct FieldResponseVector
{
    std::vector<cdouble> phases;
};

/// Receive-side channel fingerprint once the transmitter is fixed: the
/// effective path-response vector b together with the receive virtual AoAs.
struct ChannelField
{
    std::vector<cdouble> eprv;
    std::vector<VirtualAngles> virtual_aoas;

    std::size_t paths() const noexcept { return eprv.size(); }
};

/// e^{i 2 pi cycles} with an argument reduction for very large phase counts.
inline cdouble unit_phasor(double cycles)
{
    if (std::abs(cycles) > 1.0e6)
        cycles -= std::nearbyint(cycles);
    const double a = kTwoPi * cycles;
    return cdouble(std::cos(a), std::sin(a));
}

/// Map physical angles to the virtual pair (cos(theta)sin(phi), sin(theta)).
VirtualAngles virtual_aoa(const PhysicalAngles &angles);

/// Propagation-distance difference (in wavelengths) between position `pos`
/// and the reference point, for a path with virtual angles `v`.
double propagation_difference(const Position &pos, const VirtualAngles &v);

/// Field-response vector at `pos`: entry l is e^{i 2 pi rho_l(pos)}.
FieldResponseVector frv(const Position &pos, std::span<const VirtualAngles> v_list);

/// Channel coefficient h(t, r) = f(r)^H Sigma g(t).
cdouble channel_coefficient(const Position &t, const Position &r, const PathResponseMatrix &prm,
                            std::span<const VirtualAngles> tx_v, std::span<const VirtualAngles> rx_v);

/// Effective path-response vector b = Sigma g(t0), paired with the receive
/// virtual AoAs supplied by the caller.
ChannelField effective_eprv(const PathResponseMatrix &prm, const Position &t0,
                            std::span<const VirtualAngles> tx_v, std::vector<VirtualAngles> rx_v);

/// Channel power gain |sum_l b_l e^{-i 2 pi (x varphi_l + y vartheta_l)}|^2.
double channel_gain(const ChannelField &field, const Position &r);

/// Receive SNR gain * p_t / delta2.
double snr(double gain, double p_t, double delta2);

/// Rician factor |sigma_{i*,j*}|^2 / nlos_power. The NLoS power is an
/// ensemble expectation and must be supplied by the caller.
double rician_factor(const PathResponseMatrix &prm, std::size_t los_row, std::size_t los_col,
                     double nlos_power);

} // namespace masim

#endif
