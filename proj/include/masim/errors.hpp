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

#ifndef MASIM_ERRORS_HPP
#define MASIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace masim
{

// Mismatched vector/matrix sizes (angle lists vs. PRM, wrong path count).
class dimension_error : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

// Operation requires a specific number of paths.
class arity_error : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

// Two-path geometry with identical virtual AoAs: the gain field is constant
// along every direction orthogonal to nothing, no maximum-line family exists.
class degenerate_geometry_error : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

// Three-path geometry with affinely dependent virtual AoAs (|xi| below
// threshold): the maximum-point lattice is not defined.
class collinear_angles_error : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

// Requested grid exceeds the configured cell cap.
class resource_error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

// Invalid experiment configuration; carries the offending field name.
class config_error : public std::runtime_error
{
  public:
    config_error(std::string field, const std::string &what)
        : std::runtime_error("config error: field '" + field + "': " + what), field_(std::move(field))
    {
    }
    const std::string &field() const noexcept { return field_; }

  private:
    std::string field_;
};

class io_error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

} // namespace masim

#endif
