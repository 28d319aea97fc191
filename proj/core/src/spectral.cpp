#include "darboux/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace darboux {

void SolverConfig::validate() const {
  if (grid_points < 1000) throw std::invalid_argument("SolverConfig: grid_points >= 1000");
  if (!(hi > lo)) throw std::invalid_argument("SolverConfig: empty interval");
  double h = (hi - lo) / grid_points;
  if (!(wall_offset > 0) || wall_offset >= h * 100 * (hi - lo))
    throw std::invalid_argument("SolverConfig: wall_offset out of range");
  if (!(tolerance > 0)) throw std::invalid_argument("SolverConfig: tolerance > 0");
  if (eigen_count < 1) throw std::invalid_argument("SolverConfig: eigen_count >= 1");
}

namespace {

struct Grid {
  double a = 0.0, b = 0.0, h = 0.0;
  std::vector<double> v;       // potential samples on [a, b]
  double alpha_left = 1.0;     // Frobenius exponents at the two walls
  double alpha_right = 1.0;
  double vreg_left = 0.0;      // regular part of V next to each wall
  double vreg_right = 0.0;
  int match = 0;               // matching index (potential minimum)
};

// Centrifugal strength lambda = lim (x-wall)^2 V(x), from two samples;
// exact for V = lambda/t^2 + const.
void wall_behavior(const PotentialFn& pot, double wall, double into, double* alpha,
                   double* vreg) {
  double d1 = into, d2 = 2.0 * into;
  double v1 = pot(wall + d1), v2 = pot(wall + d2);
  double lambda = (v1 - v2) / (1.0 / (d1 * d1) - 1.0 / (d2 * d2));
  if (lambda < 1e-8) lambda = 0.0;
  *vreg = v1 - lambda / (d1 * d1);
  *alpha = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * lambda));
}

Grid make_grid(const PotentialFn& pot, const SolverConfig& cfg) {
  Grid g;
  g.a = cfg.lo + cfg.wall_offset;
  g.b = cfg.hi - cfg.wall_offset;
  g.h = (g.b - g.a) / (cfg.grid_points - 1);
  g.v.resize(static_cast<std::size_t>(cfg.grid_points));
  for (int i = 0; i < cfg.grid_points; ++i) g.v[static_cast<std::size_t>(i)] = pot(g.a + i * g.h);
  double sign_into = 10.0 * g.h;
  wall_behavior(pot, cfg.lo, sign_into, &g.alpha_left, &g.vreg_left);
  {
    // mirrored probe for the right wall
    double d1 = sign_into, d2 = 2.0 * sign_into;
    double v1 = pot(cfg.hi - d1), v2 = pot(cfg.hi - d2);
    double lambda = (v1 - v2) / (1.0 / (d1 * d1) - 1.0 / (d2 * d2));
    if (lambda < 1e-8) lambda = 0.0;
    g.vreg_right = v1 - lambda / (d1 * d1);
    g.alpha_right = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * lambda));
  }
  g.match = static_cast<int>(std::min_element(g.v.begin() + cfg.grid_points / 8,
                                              g.v.end() - cfg.grid_points / 8) -
                             g.v.begin());
  return g;
}

// Frobenius two-term start psi ~ t^alpha (1 + c1 t^2) at a wall.
double frobenius(double t, double alpha, double vreg, double energy) {
  double c1 = (vreg - energy) / (4.0 * alpha + 2.0);
  return std::pow(t, alpha) * (1.0 + c1 * t * t);
}

struct Shot {
  std::vector<double> left;   // indices 0..match+1
  std::vector<double> right;  // indices match-1..n-1, stored from the right
  double mismatch = 0.0;      // discrete Wronskian at the matching pair
  int nodes = 0;
};

// Numerov sweep of y'' = (V - E) y from both walls, meeting at g.match.
// The mismatch is the discrete Wronskian of the two solutions over the
// matching pair of points, which vanishes exactly at eigenvalues of the
// discrete problem.
Shot shoot(const Grid& g, const SolverConfig& cfg, double energy) {
  const int n = cfg.grid_points;
  const double h2 = g.h * g.h;
  auto t = [&](int i) { return h2 * (g.v[static_cast<std::size_t>(i)] - energy) / 12.0; };

  Shot s;
  s.left.assign(static_cast<std::size_t>(g.match) + 2, 0.0);
  double ta = g.a - cfg.lo;
  s.left[0] = frobenius(ta, g.alpha_left, g.vreg_left, energy);
  s.left[1] = frobenius(ta + g.h, g.alpha_left, g.vreg_left, energy);
  for (int i = 1; i <= g.match; ++i) {
    double y = ((2.0 + 10.0 * t(i)) * s.left[static_cast<std::size_t>(i)] -
                (1.0 - t(i - 1)) * s.left[static_cast<std::size_t>(i) - 1]) /
               (1.0 - t(i + 1));
    s.left[static_cast<std::size_t>(i) + 1] = y;
    if (std::fabs(y) > 1e100)
      for (auto& z : s.left) z *= 1e-100;
  }

  // Right sweep covers indices match-1 .. n-1.
  s.right.assign(static_cast<std::size_t>(n - g.match) + 1, 0.0);
  auto r_at = [&](int i) -> double& { return s.right[static_cast<std::size_t>(n - 1 - i)]; };
  double tb = cfg.hi - g.b;
  r_at(n - 1) = frobenius(tb, g.alpha_right, g.vreg_right, energy);
  r_at(n - 2) = frobenius(tb + g.h, g.alpha_right, g.vreg_right, energy);
  for (int i = n - 2; i > g.match - 1; --i) {
    double y = ((2.0 + 10.0 * t(i)) * r_at(i) - (1.0 - t(i + 1)) * r_at(i + 1)) /
               (1.0 - t(i - 1));
    r_at(i - 1) = y;
    if (std::fabs(y) > 1e100)
      for (auto& z : s.right) z *= 1e-100;
  }

  // Proportionality test over the matching pair (match, match+1): both
  // sweeps satisfy the same three-term recurrence, so the cross product
  // vanishes exactly when they describe one solution.
  double l0 = s.left[static_cast<std::size_t>(g.match)];
  double l1 = s.left[static_cast<std::size_t>(g.match) + 1];
  double r0 = r_at(g.match);
  double r1 = r_at(g.match + 1);
  double norm = std::max(std::fabs(l0), std::fabs(l1)) * std::max(std::fabs(r0), std::fabs(r1));
  s.mismatch = (l1 * r0 - l0 * r1) / (norm > 0 ? norm : 1.0);

  // Interior nodes of the assembled solution: left pairs up to the match
  // point, right pairs beyond it; the junction interval belongs to the
  // right sweep and global sign flips do not affect sign changes.
  int nodes = 0;
  for (int i = 0; i < g.match; ++i)
    if (s.left[static_cast<std::size_t>(i)] * s.left[static_cast<std::size_t>(i) + 1] < 0.0)
      ++nodes;
  for (int i = g.match; i < n - 1; ++i)
    if (r_at(i) * r_at(i + 1) < 0.0) ++nodes;
  s.nodes = nodes;
  return s;
}

double bisect_eigenvalue(const Grid& g, const SolverConfig& cfg, double e_lo, double e_hi,
                         double f_lo, double* residual) {
  double a = e_lo, b = e_hi, fa = f_lo;
  double mid = 0.5 * (a + b);
  for (int iter = 0; iter < 200 && (b - a) > cfg.tolerance * 0.25; ++iter) {
    mid = 0.5 * (a + b);
    double fm = shoot(g, cfg, mid).mismatch;
    if (fm == 0.0) break;
    if ((fa < 0) != (fm < 0)) {
      b = mid;
    } else {
      a = mid;
      fa = fm;
    }
  }
  mid = 0.5 * (a + b);
  *residual = std::fabs(shoot(g, cfg, mid).mismatch);
  return mid;
}

SpectralResult solve_fd_matrix(const PotentialFn& pot, const SolverConfig& cfg) {
  // Plain three-point discretization; Dirichlet walls at lo+eps, hi-eps.
  const int n = cfg.grid_points - 1;  // interior points
  const double a = cfg.lo + cfg.wall_offset;
  const double b = cfg.hi - cfg.wall_offset;
  const double h = (b - a) / (n + 1);
  Eigen::VectorXd diag(n), sub(n - 1);
  for (int i = 0; i < n; ++i) diag[i] = 2.0 / (h * h) + pot(a + (i + 1) * h);
  for (int i = 0; i + 1 < n; ++i) sub[i] = -1.0 / (h * h);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  SpectralResult res;
  res.config_echo = cfg;
  for (int i = 0; i < cfg.eigen_count && i < n; ++i) {
    res.eigenvalues.push_back(es.eigenvalues()[i]);
    res.node_counts.push_back(i);  // implied by Sturm theory for the matrix
    res.residuals.push_back(0.0);
  }
  return res;
}

}  // namespace

SpectralResult solve_dirichlet(const PotentialFn& potential, const SolverConfig& config) {
  config.validate();
  if (config.method == SolverConfig::Method::FiniteDifferenceMatrix)
    return solve_fd_matrix(potential, config);

  Grid g = make_grid(potential, config);
  SpectralResult res;
  res.config_echo = config;

  double e_floor = *std::min_element(g.v.begin(), g.v.end());
  double e = std::max(e_floor, std::min(g.vreg_left, g.vreg_right) - 10.0) + config.scan_step * 1e-3;
  Shot prev = shoot(g, config, e);
  double e_prev = e;
  while (static_cast<int>(res.eigenvalues.size()) < config.eigen_count) {
    e += config.scan_step;
    if (e - e_floor > config.scan_max)
      throw std::runtime_error(
          "solve_dirichlet: scan exhausted before finding requested eigenvalues (bracketing "
          "diagnostics: last E = " + std::to_string(e) + ", found = " +
          std::to_string(res.eigenvalues.size()) + ")");
    Shot cur = shoot(g, config, e);
    if ((prev.mismatch < 0) != (cur.mismatch < 0)) {
      double residual = 0.0;
      double root = bisect_eigenvalue(g, config, e_prev, e, prev.mismatch, &residual);
      Shot at_root = shoot(g, config, root);
      res.eigenvalues.push_back(root);
      res.node_counts.push_back(at_root.nodes);
      res.residuals.push_back(residual);
    }
    prev = cur;
    e_prev = e;
  }

  // Sturm ordering check: i-th eigenfunction has exactly i interior nodes.
  for (std::size_t i = 0; i < res.eigenvalues.size(); ++i) {
    if (res.node_counts[i] != static_cast<int>(i))
      throw std::runtime_error("solve_dirichlet: node count violates Sturm ordering at index " +
                               std::to_string(i));
  }
  return res;
}

IsospectralReport check_isospectral(const PotentialFn& pot_a, const PotentialFn& pot_b,
                                    double shift, const SolverConfig& config,
                                    int levels_deleted) {
  SolverConfig ca = config;
  ca.eigen_count = config.eigen_count + levels_deleted;
  SpectralResult ra = solve_dirichlet(pot_a, ca);
  SpectralResult rb = solve_dirichlet(pot_b, config);

  IsospectralReport rep;
  std::size_t na = ra.eigenvalues.size() - static_cast<std::size_t>(levels_deleted);
  std::size_t nb = rb.eigenvalues.size();
  rep.level_count_mismatch = na != nb;
  std::size_t n = std::min(na, nb);
  for (std::size_t i = 0; i < n; ++i) {
    double ea = ra.eigenvalues[i + static_cast<std::size_t>(levels_deleted)];
    double eb = rb.eigenvalues[i] + shift;
    rep.pairs.emplace_back(ea, eb);
    rep.max_discrepancy = std::max(rep.max_discrepancy, std::fabs(ea - eb));
  }
  return rep;
}

std::vector<double> node_positions(const PotentialFn& potential, int eigen_index,
                                   const SolverConfig& config) {
  if (eigen_index >= config.eigen_count)
    throw std::invalid_argument("node_positions: eigen_index < eigen_count required");
  SpectralResult res = solve_dirichlet(potential, config);
  double energy = res.eigenvalues[static_cast<std::size_t>(eigen_index)];

  // One full left-to-right Numerov sweep at the converged energy; nodes
  // from sign changes with linear interpolation.
  Grid g = make_grid(potential, config);
  const int n = config.grid_points;
  const double h2 = g.h * g.h;
  auto t = [&](int i) { return h2 * (g.v[static_cast<std::size_t>(i)] - energy) / 12.0; };
  std::vector<double> y(static_cast<std::size_t>(n), 0.0);
  double ta = g.a - config.lo;
  y[0] = frobenius(ta, g.alpha_left, g.vreg_left, energy);
  y[1] = frobenius(ta + g.h, g.alpha_left, g.vreg_left, energy);
  for (int i = 1; i + 1 < n; ++i)
    y[static_cast<std::size_t>(i) + 1] =
        ((2.0 + 10.0 * t(i)) * y[static_cast<std::size_t>(i)] -
         (1.0 - t(i - 1)) * y[static_cast<std::size_t>(i) - 1]) /
        (1.0 - t(i + 1));

  std::vector<double> nodes;
  for (int i = 1; i + 8 < n; ++i) {
    double y0 = y[static_cast<std::size_t>(i)], y1 = y[static_cast<std::size_t>(i) + 1];
    if (y0 == 0.0) nodes.push_back(g.a + i * g.h);
    if (y0 * y1 < 0.0) {
      double frac = y0 / (y0 - y1);
      nodes.push_back(g.a + (i + frac) * g.h);
    }
  }
  return nodes;
}

}  // namespace darboux
