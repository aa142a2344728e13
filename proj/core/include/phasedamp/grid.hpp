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

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "phasedamp/phase_core.hpp"

namespace phasedamp {

/// Uniform axis with `count` points from `min` to `max` inclusive.
class UniformAxis {
 public:
  UniformAxis(double min, double max, std::size_t count);

  double min() const noexcept { return min_; }
  double max() const noexcept { return max_; }
  std::size_t size() const noexcept { return count_; }
  double spacing() const noexcept { return (max_ - min_) / static_cast<double>(count_ - 1); }
  double operator[](std::size_t i) const noexcept {
    // Endpoint exact; interior points from a single multiply-add.
    return i + 1 == count_ ? max_ : min_ + spacing() * static_cast<double>(i);
  }

  friend bool operator==(const UniformAxis&, const UniformAxis&) = default;

 private:
  double min_;
  double max_;
  std::size_t count_;
};

enum class GridQuantity { P, Q, W, ChiReal, ChiImag };

std::string_view to_string(GridQuantity q);

struct GridMeta {
  GridQuantity quantity = GridQuantity::P;
  std::string provenance;
  double time = 0.0;
  /// Largest quadrature error estimate among the grid points (0 when exact).
  double error_estimate = 0.0;
};

/// Scalar field sampled on a rectangular phase-space grid. Values are stored
/// row-major with Re(alpha) varying fastest.
class PhaseSpaceGrid {
 public:
  PhaseSpaceGrid(UniformAxis x_axis, UniformAxis y_axis, GridMeta meta = {});

  const UniformAxis& x_axis() const noexcept { return x_; }
  const UniformAxis& y_axis() const noexcept { return y_; }
  const GridMeta& meta() const noexcept { return meta_; }
  GridMeta& meta() noexcept { return meta_; }

  std::size_t nx() const noexcept { return x_.size(); }
  std::size_t ny() const noexcept { return y_.size(); }

  double& at(std::size_t ix, std::size_t iy) { return values_[iy * nx() + ix]; }
  double at(std::size_t ix, std::size_t iy) const { return values_[iy * nx() + ix]; }
  Complex point(std::size_t ix, std::size_t iy) const { return {x_[ix], y_[iy]}; }

  const std::vector<double>& values() const noexcept { return values_; }

  /// Trapezoid-rule integral over the grid rectangle.
  double integrate() const;
  /// Trapezoid-rule integral of f(alpha) * value(alpha).
  template <typename F>
  double integrate_weighted(F&& f) const {
    double sum = 0.0;
    for (std::size_t iy = 0; iy < ny(); ++iy) {
      const double wy = (iy == 0 || iy + 1 == ny()) ? 0.5 : 1.0;
      for (std::size_t ix = 0; ix < nx(); ++ix) {
        const double wx = (ix == 0 || ix + 1 == nx()) ? 0.5 : 1.0;
        sum += wx * wy * f(point(ix, iy)) * at(ix, iy);
      }
    }
    return sum * x_.spacing() * y_.spacing();
  }

  double max_value() const;
  double min_value() const;
  double max_abs_difference(const PhaseSpaceGrid& other) const;

  /// Bilinear interpolation; zero outside the grid rectangle.
  double interpolate(Complex alpha) const;

  /// Throws DomainError if any value is NaN or infinite.
  void check_finite() const;

 private:
  UniformAxis x_;
  UniformAxis y_;
  GridMeta meta_;
  std::vector<double> values_;
};

/// Evaluate f at every grid point in a fixed order.
template <typename F>
PhaseSpaceGrid sample_grid(const UniformAxis& x, const UniformAxis& y, GridMeta meta, F&& f) {
  PhaseSpaceGrid grid(x, y, std::move(meta));
  for (std::size_t iy = 0; iy < grid.ny(); ++iy)
    for (std::size_t ix = 0; ix < grid.nx(); ++ix) grid.at(ix, iy) = f(grid.point(ix, iy));
  return grid;
}

}  // namespace phasedamp
