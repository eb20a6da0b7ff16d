// Copyright 2026 The gzeta Authors
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

#include "gzeta/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Dense>

#include "gzeta/error.hpp"
#include "gzeta/parallel.hpp"

namespace gzeta {

namespace {

void check_torus_parameters(int d, int n, const TorusOptions& options) {
  if (d < 1) throw FamilyParameterError("torus dimension must be >= 1");
  if (n < 3) throw FamilyParameterError("torus side N must be >= 3 for a simple graph");
  if (d > kMaxTorusDimension && !options.allow_large_dimension)
    throw PreconditionError("torus dimension " + std::to_string(d) + " exceeds the default cap " +
                            std::to_string(kMaxTorusDimension) +
                            "; work grows like grid^d, pass the large-dimension override");
}

std::size_t ipow(std::size_t base, int exponent) {
  std::size_t out = 1;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

double angle(std::size_t k, std::size_t n) {
  return 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
}

[[noreturn]] void throw_log_domain(double argument, const char* where, double at, double u) {
  std::ostringstream msg;
  msg.precision(15);
  msg << "log argument " << argument << " <= 0 " << where << at << " for u = " << u;
  throw DomainError(msg.str());
}

TorusZeta assemble(int d, double u, double mean_log) {
  TorusZeta z;
  z.prefactor = localization_prefactor(d, u);
  z.mean_log = mean_log;
  z.value = z.prefactor * std::exp(mean_log);
  return z;
}

}  // namespace

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 8) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

EmpiricalSpectralMeasure::EmpiricalSpectralMeasure(SpectrumList spectrum)
    : spectrum_(std::move(spectrum)) {
  if (spectrum_.eigenvalues.empty()) throw MatrixError("empty spectrum has no counting measure");
}

Rational EmpiricalSpectralMeasure::atom_weight() const {
  return make_rational(1, static_cast<std::int64_t>(spectrum_.eigenvalues.size()));
}

Rational EmpiricalSpectralMeasure::total_weight() const {
  return atom_weight() * Rational(static_cast<long>(spectrum_.eigenvalues.size()));
}

double EmpiricalSpectralMeasure::integrate(const std::function<double(double)>& f) const {
  std::vector<double> values;
  values.reserve(spectrum_.eigenvalues.size());
  for (double l : spectrum_.eigenvalues) values.push_back(f(l));
  return pairwise_sum(values) / static_cast<double>(values.size());
}

SpectrumList numeric_spectrum(const Graph& g, OperatorTag op) {
  const auto n = static_cast<Eigen::Index>(g.num_vertices());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      const auto i = static_cast<Eigen::Index>(u);
      const auto j = static_cast<Eigen::Index>(v);
      if (op == OperatorTag::laplacian)
        m(i, j) = -1.0;
      else if (g.degree(u) == g.degree(v))
        m(i, j) = 1.0 / static_cast<double>(g.degree(u));
      else
        m(i, j) = 1.0 / std::sqrt(static_cast<double>(g.degree(u) * g.degree(v)));
    }
    if (op == OperatorTag::laplacian)
      m(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(u)) =
          static_cast<double>(g.degree(u));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw MatrixError("symmetric eigensolver did not converge");
  SpectrumList out;
  out.op = op;
  out.source = SpectrumSource::numeric_symmetric;
  out.eigenvalues.assign(solver.eigenvalues().data(),
                         solver.eigenvalues().data() + solver.eigenvalues().size());
  return out;
}

SpectrumList torus_spectrum(int d, int n, OperatorTag op) {
  check_torus_parameters(d, n, TorusOptions{1, true});
  const auto side = static_cast<std::size_t>(n);
  std::vector<double> cosines(side);
  for (std::size_t k = 0; k < side; ++k) cosines[k] = std::cos(angle(k, side));

  const std::size_t count = ipow(side, d);
  SpectrumList out;
  out.op = op;
  out.source = d == 1 ? SpectrumSource::exact_circulant : SpectrumSource::closed_form_torus;
  out.eigenvalues.resize(count);
  std::vector<std::size_t> k(d, 0);
  for (std::size_t idx = 0; idx < count; ++idx) {
    double s = 0.0;
    for (int j = 0; j < d; ++j) s += cosines[k[j]];
    const double lambda_p = s / d;
    out.eigenvalues[idx] = op == OperatorTag::transition ? lambda_p : 2.0 * d * (1.0 - lambda_p);
    for (int j = d - 1; j >= 0; --j) {
      if (++k[j] < side) break;
      k[j] = 0;
    }
  }
  return out;
}

double localization_prefactor(int d, double u) {
  double p = 1.0;
  for (int i = 1; i < d; ++i) p *= 1.0 - u * u;
  return p;
}

TorusZeta finite_torus_zeta(int d, int n, double u, ZetaKind kind, const TorusOptions& options) {
  check_torus_parameters(d, n, options);
  const double q = 2.0 * d - 1.0;
  auto argument = [&](double lambda) {
    return kind == ZetaKind::grover ? (1.0 + u * u) - 2.0 * u * lambda
                                    : (1.0 + q * u * u) - (q + 1.0) * u * lambda;
  };
  const EmpiricalSpectralMeasure measure(torus_spectrum(d, n, OperatorTag::transition));
  for (double lambda : measure.spectrum().eigenvalues)
    if (const double a = argument(lambda); !(a > 0)) throw_log_domain(a, "at eigenvalue ", lambda, u);
  return assemble(d, u, measure.integrate([&](double lambda) { return std::log(argument(lambda)); }));
}

double periodic_trapezoid(int d, int grid, const std::function<double(std::span<const double>)>& f,
                          unsigned workers) {
  if (d < 1) throw PreconditionError("quadrature dimension must be >= 1");
  if (grid < 1) throw PreconditionError("quadrature grid must be positive");
  const auto g = static_cast<std::size_t>(grid);
  const std::size_t lines = ipow(g, d - 1);
  std::vector<double> line_sums(lines);
  parallel_for(lines, workers, [&](std::size_t line) {
    std::vector<double> theta(d);
    std::size_t rest = line;
    for (int j = d - 2; j >= 0; --j) {
      theta[j] = angle(rest % g, g);
      rest /= g;
    }
    std::vector<double> values(g);
    for (std::size_t k = 0; k < g; ++k) {
      theta[d - 1] = angle(k, g);
      values[k] = f(theta);
    }
    line_sums[line] = pairwise_sum(values);
  });
  return pairwise_sum(line_sums) / static_cast<double>(lines * g);
}

TorusZeta limit_integral(int d, double u, int grid, ZetaKind kind, const TorusOptions& options) {
  check_torus_parameters(d, 3, options);
  if (grid < 8) throw PreconditionError("limit_integral needs grid >= 8, got " + std::to_string(grid));
  const double a = kind == ZetaKind::grover ? 1.0 + u * u : 1.0 + (2.0 * d - 1.0) * u * u;
  const double b = kind == ZetaKind::grover ? 2.0 * u / d : 2.0 * u;
  const double mean_log = periodic_trapezoid(
      d, grid,
      [&](std::span<const double> theta) {
        double s = 0.0;
        for (double t : theta) s += std::cos(t);
        const double arg = a - b * s;
        if (!(arg > 0)) throw_log_domain(arg, "at cosine sum ", s, u);
        return std::log(arg);
      },
      options.workers);
  return assemble(d, u, mean_log);
}

ConvergenceStudy convergence_study(int d, double u, std::span<const int> sizes, ZetaKind kind,
                                   std::optional<int> reference_grid, const TorusOptions& options) {
  if (sizes.empty()) throw PreconditionError("convergence study needs at least one size");
  for (std::size_t i = 1; i < sizes.size(); ++i)
    if (sizes[i] <= sizes[i - 1])
      throw PreconditionError("convergence study sizes must be strictly ascending");
  const int largest = sizes.back();
  int grid;
  if (reference_grid) {
    if (*reference_grid < 4 * largest)
      throw PreconditionError("reference grid " + std::to_string(*reference_grid) +
                              " is below 4 x the largest size " + std::to_string(largest));
    grid = *reference_grid;
  } else {
    grid = std::max(4 * largest, d <= 2 ? kReferenceGrid : 8);
  }
  ConvergenceStudy study;
  study.reference_grid = grid;
  study.reference = limit_integral(d, u, grid, kind, options).value;
  for (int n : sizes) {
    const double v = finite_torus_zeta(d, n, u, kind, options).value;
    study.rows.push_back({n, v, std::abs(v - study.reference)});
  }
  return study;
}

}  // namespace gzeta
