#pragma once

#include <functional>
#include <vector>

namespace darboux {

struct SolverConfig {
  int grid_points = 20000;
  double lo = 0.0;
  double hi = 0.0;
  // Shooting starts this far inside a singular endpoint, with the
  // Frobenius leading behavior (x-lo)^alpha read off the centrifugal
  // coefficient.
  double wall_offset = 1e-3;
  enum class Method { NumerovShooting, FiniteDifferenceMatrix };
  Method method = Method::NumerovShooting;
  int eigen_count = 4;
  double tolerance = 1e-8;
  // Energy scan step used to bracket eigenvalues; must be below the
  // smallest level spacing of interest.
  double scan_step = 1.0;
  double scan_max = 5000.0;

  void validate() const;
};

struct SpectralResult {
  std::vector<double> eigenvalues;   // strictly increasing
  std::vector<int> node_counts;      // 0, 1, 2, ... (Sturm ordering)
  std::vector<double> residuals;     // matching mismatch at convergence
  SolverConfig config_echo;
};

using PotentialFn = std::function<double(double)>;

// Lowest eigen_count Dirichlet eigenvalues of -psi'' + V psi = E psi on
// (lo, hi). Numerov shooting from both walls with an exact discrete
// Wronskian match; node counts are verified against Sturm ordering.
// The finite-difference method solves the standard three-point matrix
// instead (second-order accurate, kept as an independent oracle).
SpectralResult solve_dirichlet(const PotentialFn& potential, const SolverConfig& config);

struct IsospectralReport {
  std::vector<std::pair<double, double>> pairs;  // (E_A, E_B + shift)
  double max_discrepancy = 0.0;
  bool level_count_mismatch = false;
};

// Pairs A's levels above its `levels_deleted` lowest with B's plus
// `shift` and reports the worst pairing error.
IsospectralReport check_isospectral(const PotentialFn& pot_a, const PotentialFn& pot_b,
                                    double shift, const SolverConfig& config,
                                    int levels_deleted = 1);

// Interior zeros of the eigen_index-th eigenfunction, located by sign
// change on the shooting solution; accurate to grid resolution.
std::vector<double> node_positions(const PotentialFn& potential, int eigen_index,
                                   const SolverConfig& config);

}  // namespace darboux
