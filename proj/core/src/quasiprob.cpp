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

#include "phasedamp/quasiprob.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace phasedamp {

namespace {

// exp(xi a^dag) restricted to rows < rows, cols < cols (lower triangular).
FockMatrix raising_exponential(Complex xi, int rows, int cols) {
  FockMatrix e = FockMatrix::Zero(rows, cols);
  const double r = std::abs(xi);
  const double phase = std::arg(xi);
  for (int k = 0; k < cols; ++k) {
    for (int m = k; m < rows; ++m) {
      const int d = m - k;
      double mag;
      if (d == 0) {
        mag = 1.0;
      } else if (r == 0.0) {
        continue;
      } else {
        mag = std::exp(0.5 * (std::lgamma(m + 1.0) - std::lgamma(k + 1.0)) - std::lgamma(d + 1.0) + d * std::log(r));
      }
      e(m, k) = std::polar(mag, d * phase);
    }
  }
  return e;
}

// exp(-xi* a) = [exp(-xi a^dag)]^dag
FockMatrix lowering_exponential(Complex xi, int rows, int cols) {
  return raising_exponential(-xi, cols, rows).adjoint();
}

// <m| exp(-xi* a) exp(xi a^dag) |n> = e^{i(m-n) arg xi} sum_{k >= max(m,n)} (-1)^{k-m}
//   |xi|^{2k-m-n} k! / (sqrt(m! n!) (k-m)! (k-n)!)
// summed in extended precision; the alternating terms peak near e^{|xi|^2}.
Complex antinormal_trace_direct(const FockMatrix& rho, Complex xi) {
  const int n = static_cast<int>(rho.rows());
  const long double x = std::norm(xi);
  const long double log_r = 0.5L * std::log(x);
  const double phase = std::arg(xi);
  const int top = n + 40 + static_cast<int>(std::ceil(6.0 * static_cast<double>(x)));
  std::vector<long double> log_fact(static_cast<std::size_t>(top + 1), 0.0L);
  for (int k = 1; k <= top; ++k) log_fact[static_cast<std::size_t>(k)] = log_fact[static_cast<std::size_t>(k - 1)] + std::log(static_cast<long double>(k));
  auto lf = [&](int k) { return log_fact[static_cast<std::size_t>(k)]; };
  Complex total{};
  for (int m = 0; m < n; ++m)
    for (int c = 0; c < n; ++c) {
      const Complex r = rho(c, m);
      if (r == Complex{}) continue;
      long double sum = 0.0L;
      for (int k = std::max(m, c); k <= top; ++k) {
        const long double mag = std::exp(lf(k) - 0.5L * (lf(m) + lf(c)) - lf(k - m) - lf(k - c) + (2 * k - m - c) * log_r);
        sum += ((k - m) % 2 == 0) ? mag : -mag;
      }
      total += r * std::polar(static_cast<double>(sum), (m - c) * phase);
    }
  return total;
}

int highest_populated_level(const FockDensityMatrix& rho, double threshold = 1e-15) {
  int top = 0;
  for (int k = 0; k < rho.cutoff(); ++k) {
    if (std::abs(rho.population(k)) > threshold) top = k;
  }
  return top;
}

// Tr(rho D(xi)) over the leading `block` levels, with Laguerre recurrences
// along each diagonal.
Complex trace_with_displacement(const FockMatrix& rho, int block, Complex xi) {
  const double x = std::norm(xi);
  if (x == 0.0) return rho.topLeftCorner(block, block).trace();
  const double log_r = 0.5 * std::log(x);
  const double phase = std::arg(xi);
  Complex total{};
  for (int d = 0; d < block; ++d) {
    const int count = block - d;
    double pref = std::exp(-0.5 * x + d * log_r - 0.5 * std::lgamma(d + 1.0));
    double l_prev = 0.0, l_cur = 1.0;
    const Complex down = std::polar(1.0, d * phase);
    const Complex up = (d % 2 == 0 ? 1.0 : -1.0) * std::conj(down);
    for (int n = 0; n < count; ++n) {
      if (n == 1) {
        l_prev = 1.0;
        l_cur = 1.0 + d - x;
      } else if (n > 1) {
        const double next = ((2.0 * (n - 1) + 1.0 + d - x) * l_cur - (n - 1 + d) * l_prev) / n;
        l_prev = l_cur;
        l_cur = next;
      }
      if (n > 0) pref *= std::sqrt(static_cast<double>(n) / (n + d));
      const double mag = pref * l_cur;
      Complex term = rho(n, n + d) * down;
      if (d > 0) term += rho(n + d, n) * up;
      total += mag * term;
    }
  }
  return total;
}

}  // namespace

CharacteristicValue characteristic_function_checked(const FockDensityMatrix& rho, Complex xi, Ordering ordering) {
  const int n = rho.cutoff();
  CharacteristicValue out;
  out.guard_violated = std::norm(xi) >= 0.25 * n;
  const FockMatrix& m = rho.elements();
  switch (ordering) {
    case Ordering::Normal: {
      const FockMatrix product = raising_exponential(xi, n, n) * lowering_exponential(xi, n, n);
      out.value = (m * product).trace();
      break;
    }
    case Ordering::Symmetric:
      out.value = (m * displacement_matrix(xi, n, n)).trace();
      break;
    case Ordering::Antinormal:
      if (std::norm(xi) == 0.0) {
        out.value = m.trace();
      } else if (std::norm(xi) <= kAntinormalDirectLimit) {
        out.value = antinormal_trace_direct(m, xi);
      } else {
        // exp(-xi* a) exp(xi a^dag) = exp(xi a^dag) exp(-xi* a) exp(-|xi|^2)
        const FockMatrix product = raising_exponential(xi, n, n) * lowering_exponential(xi, n, n);
        out.value = (m * product).trace() * std::exp(-std::norm(xi));
      }
      break;
  }
  return out;
}

Complex characteristic_function(const FockDensityMatrix& rho, Complex xi, Ordering ordering) {
  return characteristic_function_checked(rho, xi, ordering).value;
}

SmoothedValue p_to_q_smoothing(const PFunctionDescriptor& p, Complex alpha, double tolerance) {
  return smooth_p(p, alpha, SmoothingKernel{1.0, 1.0}, SmoothingMethod::ClosedForm, tolerance);
}

PhaseSpaceGrid p_to_q_grid(const PFunctionDescriptor& p, const UniformAxis& x_axis, const UniformAxis& y_axis,
                           double tolerance) {
  GridMeta meta;
  meta.quantity = GridQuantity::Q;
  meta.provenance = "p-smoothing";
  PhaseSpaceGrid grid(x_axis, y_axis, meta);
  double worst = 0.0;
  for (std::size_t iy = 0; iy < grid.ny(); ++iy) {
    for (std::size_t ix = 0; ix < grid.nx(); ++ix) {
      const auto r = p_to_q_smoothing(p, grid.point(ix, iy), tolerance);
      grid.at(ix, iy) = r.value;
      worst = std::max(worst, r.error_estimate);
    }
  }
  grid.meta().error_estimate = worst;
  return grid;
}

PhaseSpaceGrid wigner_from_characteristic(const FockDensityMatrix& rho, const UniformAxis& x_axis,
                                          const UniformAxis& y_axis) {
  const int top = highest_populated_level(rho);
  const int block = std::min(rho.cutoff(), top + 2);
  const double h = std::min(x_axis.spacing(), y_axis.spacing());
  const double extent = std::max(kPi / h, std::sqrt(4.0 * top + 2.0) + 8.0);
  const double reach = std::max({std::abs(x_axis.min()), std::abs(x_axis.max()), std::abs(y_axis.min()),
                                 std::abs(y_axis.max())});
  const double support = std::sqrt(2.0 * top + 1.0) + 6.0;
  const double dxi_max = kPi / (2.0 * (reach + support));
  const int half = static_cast<int>(std::ceil(extent / dxi_max));
  const double dxi = extent / half;
  const int count = 2 * half + 1;

  // chi(j_r, j_i) with xi = (j_r - half) dxi + i (j_i - half) dxi
  // Hermitian rho gives chi(-xi) = conj(chi(xi)); only half the plane is traced.
  FockMatrix chi(count, count);
  for (int jr = 0; jr < count; ++jr)
    for (int ji = 0; ji < count; ++ji) {
      if (jr * count + ji > half * count + half) continue;
      const Complex v = trace_with_displacement(rho.elements(), block, Complex((jr - half) * dxi, (ji - half) * dxi));
      chi(jr, ji) = v;
      chi(count - 1 - jr, count - 1 - ji) = std::conj(v);
    }

  const auto nx = static_cast<Eigen::Index>(x_axis.size());
  const auto ny = static_cast<Eigen::Index>(y_axis.size());
  // exp(alpha xi* - alpha* xi) = exp(2i (alpha_i xi_r - alpha_r xi_i))
  FockMatrix along_im(ny, count), along_re(nx, count);
  for (Eigen::Index i = 0; i < ny; ++i)
    for (int j = 0; j < count; ++j) along_im(i, j) = std::polar(1.0, 2.0 * y_axis[i] * (j - half) * dxi);
  for (Eigen::Index i = 0; i < nx; ++i)
    for (int j = 0; j < count; ++j) along_re(i, j) = std::polar(1.0, -2.0 * x_axis[i] * (j - half) * dxi);
  const FockMatrix w = (dxi * dxi / (kPi * kPi)) * (along_im * chi * along_re.transpose());

  GridMeta meta;
  meta.quantity = GridQuantity::W;
  meta.provenance = "characteristic-transform";
  PhaseSpaceGrid grid(x_axis, y_axis, meta);
  double residue = 0.0;
  for (Eigen::Index iy = 0; iy < ny; ++iy)
    for (Eigen::Index ix = 0; ix < nx; ++ix) {
      grid.at(static_cast<std::size_t>(ix), static_cast<std::size_t>(iy)) = w(iy, ix).real();
      residue = std::max(residue, std::abs(w(iy, ix).imag()));
    }
  if (residue > 1e-8) {
    std::ostringstream msg;
    msg << "wigner_from_characteristic: imaginary residue " << residue << " exceeds 1e-8";
    throw DomainError(msg.str());
  }
  const double mismatch = std::abs(grid.integrate() - rho.trace());
  if (mismatch > 1e-3) {
    std::ostringstream msg;
    msg << "wigner_from_characteristic: integral of W differs from Tr(rho) by " << mismatch
        << "; enlarge the alpha grid to at least +/-" << support << " or refine it";
    throw DomainError(msg.str());
  }
  grid.meta().error_estimate = residue;
  return grid;
}

double wigner_at_origin_parity(const FockDensityMatrix& rho) {
  double parity = 0.0;
  for (int k = 0; k < rho.cutoff(); ++k) parity += (k % 2 == 0 ? 1.0 : -1.0) * rho.population(k);
  return 2.0 / kPi * parity;
}

}  // namespace phasedamp
