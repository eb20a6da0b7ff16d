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

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "gzeta/graph.hpp"
#include "gzeta/rational.hpp"
#include "gzeta/zeta.hpp"

namespace gzeta {

enum class OperatorTag { transition, laplacian };
enum class SpectrumSource { closed_form_torus, exact_circulant, numeric_symmetric };

/// Eigenvalues with multiplicity (one entry per vertex).
struct SpectrumList {
  std::vector<double> eigenvalues;
  OperatorTag op = OperatorTag::transition;
  SpectrumSource source = SpectrumSource::numeric_symmetric;
};

/// Sum by recursive halving. The result depends only on the order of the
/// input, never on how a caller partitions the work.
double pairwise_sum(std::span<const double> values);

/// Normalized counting measure on a spectrum: every eigenvalue has weight
/// 1/ν.
class EmpiricalSpectralMeasure {
 public:
  explicit EmpiricalSpectralMeasure(SpectrumList spectrum);

  const SpectrumList& spectrum() const { return spectrum_; }
  Rational atom_weight() const;
  /// ν · (1/ν), exactly 1.
  Rational total_weight() const;
  /// ∫ f dμ = (1/ν) Σ_λ f(λ), pairwise summed in spectrum order.
  double integrate(const std::function<double(double)>& f) const;

 private:
  SpectrumList spectrum_;
};

/// Eigenvalues of P or Δ by a dense symmetric solver, ascending. For
/// non-regular graphs P is diagonalized through the similar symmetric
/// matrix D^{-1/2} A D^{-1/2}.
SpectrumList numeric_spectrum(const Graph& g, OperatorTag op);

/// Closed form for T^d_N: λ_P(k) = (1/d) Σ_j cos(2π k_j / N) over
/// k ∈ {0..N-1}^d in lexicographic order (k_1 slowest); λ_Δ = 2d(1 - λ_P).
/// Requires d >= 1 and N >= 3 (FamilyParameterError).
SpectrumList torus_spectrum(int d, int n, OperatorTag op);

/// Dimensions above this need TorusOptions::allow_large_dimension.
inline constexpr int kMaxTorusDimension = 4;

struct TorusOptions {
  unsigned workers = 1;
  bool allow_large_dimension = false;
};

/// A torus zeta reciprocal split into its parts:
/// value = prefactor · exp(mean_log), prefactor = (1-u²)^{d-1}.
struct TorusZeta {
  double value = 1.0;
  double prefactor = 1.0;
  double mean_log = 0.0;
};

/// (1-u²)^{d-1}, the factor tied to localization of the Grover walk.
double localization_prefactor(int d, double u);

/// Finite torus T^d_N through the P-spectrum:
///   grover: (1-u²)^{d-1} exp[(1/N^d) Σ_λ log((1+u²) - 2uλ)]
///   ihara:  (1-u²)^{d-1} exp[(1/N^d) Σ_λ log((1+(2d-1)u²) - 2d u λ)]
/// DomainError when some argument is not positive.
TorusZeta finite_torus_zeta(int d, int n, double u, ZetaKind kind,
                            const TorusOptions& options = {});

/// G-point-per-axis periodic trapezoid rule for the mean of f over
/// [0, 2π]^d with the uniform measure. Nodes θ = 2π k / G; the innermost
/// axis is summed pairwise per line, then the line sums pairwise.
double periodic_trapezoid(int d, int grid, const std::function<double(std::span<const double>)>& f,
                          unsigned workers = 1);

/// N → ∞ limit of the torus zeta reciprocal as a d-fold integral,
///   grover: log((1+u²) - (2u/d) Σ cos θ_j)
///   ihara:  log((1+(2d-1)u²) - 2u Σ cos θ_j)
/// evaluated with periodic_trapezoid at `grid` >= 8 points per axis.
/// The rule at grid G reproduces finite_torus_zeta at N = G.
TorusZeta limit_integral(int d, double u, int grid, ZetaKind kind,
                         const TorusOptions& options = {});

struct ConvergenceRow {
  int n = 0;
  double value = 0.0;
  double abs_error = 0.0;
};

struct ConvergenceStudy {
  int reference_grid = 0;
  double reference = 0.0;
  std::vector<ConvergenceRow> rows;
};

/// Default reference resolution for convergence studies.
inline constexpr int kReferenceGrid = 4096;

/// finite_torus_zeta along an ascending list of sizes against
/// limit_integral at `reference_grid` (default max(kReferenceGrid,
/// 4·max N); explicit values below 4·max N are rejected).
ConvergenceStudy convergence_study(int d, double u, std::span<const int> sizes, ZetaKind kind,
                                   std::optional<int> reference_grid = std::nullopt,
                                   const TorusOptions& options = {});

}  // namespace gzeta
