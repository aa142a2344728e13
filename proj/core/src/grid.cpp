// Copyright 2026 The phasedamp Authors
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

#include "phasedamp/grid.hpp"

#include <algorithm>
#include <cmath>

namespace phasedamp {

UniformAxis::UniformAxis(double min, double max, std::size_t count) : min_(min), max_(max), count_(count) {
  if (count < 2) throw DomainError("UniformAxis: need at least two points");
  if (!std::isfinite(min) || !std::isfinite(max) || !(max > min)) {
    throw DomainError("UniformAxis: bounds must be finite and strictly increasing");
  }
}

std::string_view to_string(GridQuantity q) {
  switch (q) {
    case GridQuantity::P: return "P";
    case GridQuantity::Q: return "Q";
    case GridQuantity::W: return "W";
    case GridQuantity::ChiReal: return "chi-real";
    case GridQuantity::ChiImag: return "chi-imag";
  }
  return "?";
}

PhaseSpaceGrid::PhaseSpaceGrid(UniformAxis x_axis, UniformAxis y_axis, GridMeta meta)
    : x_(x_axis), y_(y_axis), meta_(std::move(meta)), values_(x_axis.size() * y_axis.size(), 0.0) {}

double PhaseSpaceGrid::integrate() const {
  return integrate_weighted([](Complex) { return 1.0; });
}

double PhaseSpaceGrid::max_value() const { return *std::max_element(values_.begin(), values_.end()); }

double PhaseSpaceGrid::min_value() const { return *std::min_element(values_.begin(), values_.end()); }

double PhaseSpaceGrid::max_abs_difference(const PhaseSpaceGrid& other) const {
  if (!(x_ == other.x_) || !(y_ == other.y_)) throw DomainError("grid axes differ");
  double worst = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) worst = std::max(worst, std::abs(values_[i] - other.values_[i]));
  return worst;
}

double PhaseSpaceGrid::interpolate(Complex alpha) const {
  const double fx = (alpha.real() - x_.min()) / x_.spacing();
  const double fy = (alpha.imag() - y_.min()) / y_.spacing();
  if (fx < 0.0 || fy < 0.0 || fx > static_cast<double>(nx() - 1) || fy > static_cast<double>(ny() - 1)) return 0.0;
  const auto ix = std::min(static_cast<std::size_t>(fx), nx() - 2);
  const auto iy = std::min(static_cast<std::size_t>(fy), ny() - 2);
  const double tx = fx - static_cast<double>(ix);
  const double ty = fy - static_cast<double>(iy);
  return (1 - tx) * (1 - ty) * at(ix, iy) + tx * (1 - ty) * at(ix + 1, iy) + (1 - tx) * ty * at(ix, iy + 1) +
         tx * ty * at(ix + 1, iy + 1);
}

void PhaseSpaceGrid::check_finite() const {
  for (double v : values_) {
    if (!std::isfinite(v)) throw DomainError("PhaseSpaceGrid: non-finite value");
  }
}

}  // namespace phasedamp
