#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "darboux/potentials.hpp"
#include "darboux/ratio_expr.hpp"
#include "darboux/seeds.hpp"
#include "darboux/wronskian.hpp"

namespace darboux {

// w = -psi'/psi, the Riccati form of a state.
RatioExpr rs_function(const RingElem& state);

// Exact eigenvalue of `state` under `potential` when -psi'' + V psi = E psi
// holds identically in the ring; nullopt when the state is not an exact
// eigenfunction.
std::optional<Rational> eigen_energy(const RatioExpr& potential, const RingElem& state);

// Residual -psi'' + (V - E) psi == 0 as an exact ring identity, for
// psi = num/den (den may be 1).
bool schrodinger_residual_zero(const RatioExpr& potential, const RingElem& num,
                               const RingElem& den, const Rational& energy);

struct DbtStepResult {
  RatioExpr new_potential;     // V + 2 w_seed'
  RatioExpr transformed_state; // W(seed, target)/seed
  Rational energy_shift_used;  // E_target - E_seed
};

// One Darboux step from an exact seed eigenfunction, applied to an exact
// target eigenfunction at a distinct energy. Both eigenfunction claims
// are checked symbolically, as is the transformed state's residual.
DbtStepResult dbt_apply(const RatioExpr& potential, const RingElem& seed,
                        const RingElem& target);

// Seed selection for the trigonometric Poschl-Teller target V(x;m,n):
// sin(x), ..., sin((m-n)x), then sin((m-n+2)x), ..., sin((m+n)x).
ChainSpec tdpt_seed_chain(int m, int n);

struct WronskianRepCertificate {
  int m = 0, n = 0;
  std::vector<std::string> seeds;
  std::string wronskian_canonical;
  bool identity_verified = false;
  std::size_t max_coeff_bits = 0;
  double wall_ms = 0.0;
  std::vector<std::string> flags;
  nlohmann::ordered_json to_json() const;
};

// Certifies -2 (ln W(seeds))'' == m(m+1)/sin^2 x + n(n+1)/cos^2 x exactly.
WronskianRepCertificate verify_tdpt_wronskian(int m, int n);

struct CrumStepwiseComparison {
  bool proportional = false;
  Rational scale;          // stepwise = scale * wronskian-ratio
  Rational target_energy;
  bool residual_zero = false;  // final state vs stepwise-accumulated potential
  int steps = 0;
  std::vector<std::string> seeds;
  std::string target;
  std::size_t max_coeff_bits = 0;
  double wall_ms = 0.0;
  nlohmann::ordered_json to_json() const;
  bool ok() const { return proportional && residual_zero; }
};

// Runs the chain twice: as iterated first-order operators and via the
// closed Wronskian ratio, and records the exact rational constant
// relating the two results.
CrumStepwiseComparison verify_crum_vs_stepwise(const ChainSpec& chain, const SeedSpec& target);

struct ShapeInvarianceCertificate {
  int m = 0, n = 0;
  int partner_m = 0, partner_n = 0;
  std::string ground;
  bool ground_residual_ok = false;
  bool partner_identity_ok = false;
  Rational ground_energy;
  Rational partner_ground_energy;
  Rational shift_constant;  // partner minus V(partner params), a rational
  double wall_ms = 0.0;
  bool ok() const { return ground_residual_ok && partner_identity_ok; }
  nlohmann::ordered_json to_json() const;
};

// Certifies V(x;m,n) + 2 (rs(ground))' == V(partner params) + R exactly,
// with the ground state s^{m+1} c^{n+1} (boundary branches s^{m+1} for
// n = 0 and c^{n+1} for m = 0).
ShapeInvarianceCertificate verify_shape_invariance(int m, int n);

struct FilteredLevel {
  int k = 0;
  long energy = 0;
  std::string label;
};

// Spectrum left after running the chain: each seed deletes its own free
// level; a seed whose stage image vanishes at pi/2 makes the step
// singular there and keeps only the levels whose stage images also
// vanish at pi/2 (Dirichlet filtering), shrinking the interval to
// (0, pi/2). All vanishing tests are exact ring evaluations.
std::vector<FilteredLevel> predict_filtered_spectrum(const ChainSpec& chain, int max_level);

}  // namespace darboux
