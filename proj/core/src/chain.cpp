#include "darboux/chain.hpp"

#include <chrono>
#include <cmath>
#include <set>
#include <stdexcept>

namespace darboux {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

TrigPoly trig_power(const TrigPoly& base, int e) {
  TrigPoly acc(Rational(1));
  for (int i = 0; i < e; ++i) acc = acc * base;
  return acc;
}

// Common-denominator view of a family of functions transformed together
// through a chain of first-order operators. After each stage the theory
// predicts the shared d^2 factor cancels; the cancellation is attempted
// by verified exact division and kept unreduced when it fails, so the
// route never assumes the closed formula it is compared against.
struct StepwiseFamily {
  std::vector<RingElem> nums;
  RingElem den;

  explicit StepwiseFamily(RingTag tag) : den(RingElem::one(tag)) {}

  // Applies A(w) with w = -p'/p (seed image p/den) to entries from
  // `first` on: f -> f' + w f.
  void apply_step(std::size_t seed_index, std::size_t first) {
    const RingElem p = nums[seed_index];
    if (p.is_zero()) throw std::invalid_argument("stepwise chain: zero seed image");
    const RingElem d = den;
    const RingElem dp = d.derivative();
    const RingElem pp = p.derivative();
    const RingElem pd_term = pp * d - p * dp;

    std::vector<RingElem> raws;
    raws.reserve(nums.size());
    bool all_reduced = true;
    std::vector<RingElem> reduced(nums.size(), RingElem::zero(d.tag()));
    for (std::size_t i = first; i < nums.size(); ++i) {
      const RingElem& f = nums[i];
      RingElem raw = (f.derivative() * d - f * dp) * p - pd_term * f;
      RingElem q1, q2;
      if (RingElem::divide_exact(raw, d, &q1) && RingElem::divide_exact(q1, d, &q2)) {
        reduced[i] = std::move(q2);
      } else {
        all_reduced = false;
      }
      raws.push_back(std::move(raw));
    }
    if (all_reduced) {
      for (std::size_t i = first; i < nums.size(); ++i) nums[i] = reduced[i];
      den = p;
    } else {
      std::size_t r = 0;
      for (std::size_t i = first; i < nums.size(); ++i) nums[i] = std::move(raws[r++]);
      den = p * d * d;
    }
    normalize_content();
  }

  void normalize_content() {
    Rational c = den.content();
    if (c.is_zero() || c == Rational(1)) return;
    Rational inv = Rational(1) / c;
    den = den * inv;
    for (auto& f : nums) f = f * inv;
  }
};

std::vector<RingElem> realize_all(const std::vector<SeedSpec>& seeds) {
  std::vector<RingElem> elems;
  elems.reserve(seeds.size());
  for (const auto& s : seeds) elems.push_back(s.realize());
  return elems;
}

}  // namespace

RatioExpr rs_function(const RingElem& state) {
  if (state.is_zero()) throw std::invalid_argument("rs_function: zero state");
  return RatioExpr(-state.derivative(), state);
}

std::optional<Rational> eigen_energy(const RatioExpr& potential, const RingElem& state) {
  if (state.is_zero()) return std::nullopt;
  // E = (V psi - psi'') / psi must be a rational constant.
  RingElem num = potential.num() * state - potential.den() * state.derivative().derivative();
  RingElem den = potential.den() * state;
  return RingElem::rational_ratio(num, den);
}

bool schrodinger_residual_zero(const RatioExpr& potential, const RingElem& num,
                               const RingElem& den, const Rational& energy) {
  // For psi = n/d:  psi'' = (n'' d^2 - 2 n' d' d - n d'' d + 2 n d'^2) / d^3.
  // Residual * d^3 * Vd:  -(...) Vd + (Vn - E Vd) n d^2 == 0.
  const RingElem& n = num;
  const RingElem& d = den;
  RingElem n1 = n.derivative(), n2 = n1.derivative();
  RingElem d1 = d.derivative(), d2 = d1.derivative();
  RingElem two(RingElem::one(n.tag()) * Rational(2));
  RingElem psi2_num = n2 * d * d - two * n1 * d1 * d - n * d2 * d + two * n * d1 * d1;
  RingElem lhs = -(psi2_num * potential.den()) +
                 (potential.num() - potential.den() * energy) * n * d * d;
  return lhs.is_zero();
}

DbtStepResult dbt_apply(const RatioExpr& potential, const RingElem& seed,
                        const RingElem& target) {
  auto e_seed = eigen_energy(potential, seed);
  auto e_target = eigen_energy(potential, target);
  if (!e_seed || !e_target)
    throw std::invalid_argument("dbt_apply: seed/target not eigenfunctions");
  if (*e_seed == *e_target)
    throw std::invalid_argument(
        "dbt_apply: confluent step (equal energies) requires the confluent Bessel machinery");

  RatioExpr new_potential = potential + rs_function(seed).derivative() * Rational(2);
  RingElem w = wronskian({seed, target});
  RatioExpr transformed(w, seed);
  if (!schrodinger_residual_zero(new_potential, w, seed, *e_target))
    throw std::logic_error("dbt_apply: transformed state failed the exact residual check");
  return DbtStepResult{std::move(new_potential), std::move(transformed), *e_target - *e_seed};
}

ChainSpec tdpt_seed_chain(int m, int n) {
  if (m < n) throw std::invalid_argument("tdpt_seed_chain: requires m >= n");
  if (m < 1)
    throw std::invalid_argument("tdpt_seed_chain: empty chain (target is the zero potential)");
  ChainSpec chain;
  for (int l = 1; l <= m - n; ++l) chain.seeds.push_back(SeedSpec::sin_k(l));
  for (int l = 1; l <= n; ++l) chain.seeds.push_back(SeedSpec::sin_k(m - n + 2 * l));
  chain.target.family = PotentialParams::Family::Tdpt;
  chain.target.m = m;
  chain.target.n = n;
  chain.target.lo = 0.0;
  chain.target.hi = n == 0 ? M_PI : M_PI / 2;
  chain.degenerate_equal_params = (m == n);
  return chain;
}

nlohmann::ordered_json WronskianRepCertificate::to_json() const {
  nlohmann::ordered_json j;
  j["params"] = {{"family", "tdpt"}, {"m", m}, {"n", n}};
  j["seeds"] = seeds;
  j["wronskian"] = wronskian_canonical;
  j["identity_verified"] = identity_verified;
  j["max_coeff_bits"] = max_coeff_bits;
  j["flags"] = flags;
  j["wall_ms"] = wall_ms;
  return j;
}

WronskianRepCertificate verify_tdpt_wronskian(int m, int n) {
  auto t0 = Clock::now();
  ChainSpec chain = tdpt_seed_chain(m, n);
  std::vector<RingElem> cols = realize_all(chain.seeds);
  RingElem w = wronskian(std::span<const RingElem>(cols));

  WronskianRepCertificate cert;
  cert.m = m;
  cert.n = n;
  for (const auto& s : chain.seeds) cert.seeds.push_back(s.text());
  cert.wronskian_canonical = w.str();
  cert.max_coeff_bits = w.max_coeff_bits();
  if (chain.degenerate_equal_params) cert.flags.push_back("degenerate-equal-parameters");

  RatioExpr pot = potential_from_wronskian(w);
  cert.identity_verified = pot.equals(tdpt_potential(m, n));
  cert.wall_ms = ms_since(t0);
  return cert;
}

nlohmann::ordered_json CrumStepwiseComparison::to_json() const {
  nlohmann::ordered_json j;
  j["seeds"] = seeds;
  j["target"] = target;
  j["target_energy"] = target_energy.str();
  j["proportional"] = proportional;
  j["scale"] = scale.str();
  j["residual_zero"] = residual_zero;
  j["steps"] = steps;
  j["max_coeff_bits"] = max_coeff_bits;
  j["wall_ms"] = wall_ms;
  return j;
}

CrumStepwiseComparison verify_crum_vs_stepwise(const ChainSpec& chain, const SeedSpec& target) {
  auto t0 = Clock::now();
  if (chain.seeds.empty()) throw std::invalid_argument("verify_crum_vs_stepwise: empty chain");

  CrumStepwiseComparison cmp;
  cmp.steps = static_cast<int>(chain.seeds.size());
  for (const auto& s : chain.seeds) cmp.seeds.push_back(s.text());
  cmp.target = target.text();

  // Distinct energies only; the confluent case is a different algorithm.
  std::set<Rational> energies;
  for (const auto& s : chain.seeds) {
    if (!energies.insert(s.energy()).second)
      throw std::invalid_argument(
          "verify_crum_vs_stepwise: repeated seed energy (confluent chain is delegated)");
  }
  if (energies.contains(target.energy()))
    throw std::invalid_argument("verify_crum_vs_stepwise: target energy collides with a seed");
  cmp.target_energy = target.energy();

  std::vector<RingElem> seed_elems = realize_all(chain.seeds);
  RingElem target_elem = target.realize();
  const RingTag tag = target_elem.tag();

  // Route 1: iterated first-order operators; everything downstream of a
  // stage is transformed together so the stage seed images are the
  // stepwise ones, never the Wronskian formula.
  StepwiseFamily family(tag);
  family.nums = seed_elems;
  family.nums.push_back(target_elem);
  RatioExpr potential = zero_potential(tag);
  for (std::size_t j = 0; j < seed_elems.size(); ++j) {
    // V -> V + 2 (rs(sigma))' with sigma = p/d the stage seed image.
    const RingElem& p = family.nums[j];
    const RingElem& d = family.den;
    RatioExpr rs(-(p.derivative() * d - p * d.derivative()), p * d);
    potential = (potential + rs.derivative() * Rational(2))
                    .reduced_by(d)
                    .reduced_by(p)
                    .content_normalized();
    family.apply_step(j, j + 1);
  }
  RingElem stepwise_num = family.nums.back();
  RingElem stepwise_den = family.den;

  // Route 2: Crum ratio of Wronskians.
  RingElem w_seeds = wronskian(std::span<const RingElem>(seed_elems));
  std::vector<RingElem> with_target = seed_elems;
  with_target.push_back(target_elem);
  RingElem w_full = wronskian(std::span<const RingElem>(with_target));

  auto scale = RingElem::rational_ratio(stepwise_num * w_seeds, w_full * stepwise_den);
  cmp.proportional = scale.has_value() && !scale->is_zero();
  if (scale) cmp.scale = *scale;

  cmp.residual_zero =
      schrodinger_residual_zero(potential, stepwise_num, stepwise_den, target.energy());
  cmp.max_coeff_bits = std::max(stepwise_num.max_coeff_bits(), w_full.max_coeff_bits());
  cmp.wall_ms = ms_since(t0);
  return cmp;
}

nlohmann::ordered_json ShapeInvarianceCertificate::to_json() const {
  nlohmann::ordered_json j;
  j["params"] = {{"family", "tdpt"}, {"m", m}, {"n", n}};
  j["partner_params"] = {{"m", partner_m}, {"n", partner_n}};
  j["ground"] = ground;
  j["ground_residual_ok"] = ground_residual_ok;
  j["partner_identity_ok"] = partner_identity_ok;
  j["ground_energy"] = ground_energy.str();
  j["partner_ground_energy"] = partner_ground_energy.str();
  j["shift_constant"] = shift_constant.str();
  j["wall_ms"] = wall_ms;
  return j;
}

ShapeInvarianceCertificate verify_shape_invariance(int m, int n) {
  auto t0 = Clock::now();
  if (m < 0 || n < 0) throw std::invalid_argument("verify_shape_invariance: negative parameter");
  if (m == 0 && n == 0)
    throw std::invalid_argument(
        "verify_shape_invariance: (0,0) is the square-well limit, verified spectrally only");

  ShapeInvarianceCertificate cert;
  cert.m = m;
  cert.n = n;
  // Boundary branches: n = 0 keeps the pure sin ground state on (0,pi);
  // m = 0 keeps the pure cos one on the symmetric interval.
  cert.partner_m = m == 0 ? 0 : m + 1;
  cert.partner_n = n == 0 ? 0 : n + 1;

  auto ground_elem = [](int mm, int nn) {
    TrigPoly g(Rational(1));
    if (mm > 0) g = g * trig_power(TrigPoly::sin_kx(1), mm + 1);
    if (nn > 0) g = g * trig_power(TrigPoly::cos_kx(1), nn + 1);
    return RingElem(g);
  };
  RingElem ground = ground_elem(m, n);
  cert.ground = ground.str();

  RatioExpr v = tdpt_potential(m, n);
  auto e0 = eigen_energy(v, ground);
  if (!e0)
    throw std::invalid_argument("verify_shape_invariance: ground state fails Schrodinger residual");
  cert.ground_residual_ok = true;
  cert.ground_energy = *e0;

  RatioExpr partner = v + rs_function(ground).derivative() * Rational(2);
  RatioExpr v_next = tdpt_potential(cert.partner_m, cert.partner_n);
  auto shift = (partner - v_next).rational_constant();
  cert.partner_identity_ok = shift.has_value();
  if (shift) cert.shift_constant = *shift;

  auto e0_next = eigen_energy(v_next, ground_elem(cert.partner_m, cert.partner_n));
  cert.partner_ground_energy = e0_next.value_or(Rational(0));
  cert.wall_ms = ms_since(t0);
  return cert;
}

std::vector<FilteredLevel> predict_filtered_spectrum(const ChainSpec& chain, int max_level) {
  if (max_level < 1) throw std::invalid_argument("predict_filtered_spectrum: max_level >= 1");
  std::set<int> seen;
  for (const auto& s : chain.seeds) {
    if (s.kind != SeedSpec::Kind::SinK)
      throw std::invalid_argument("predict_filtered_spectrum: chain must use sin seeds");
    if (!seen.insert(s.k).second)
      throw std::invalid_argument("predict_filtered_spectrum: repeated seed");
  }

  std::set<int> survivors;
  for (int k = 1; k <= max_level; ++k) survivors.insert(k);

  const Rational c_half(0), s_half(1);  // the circle point for x = pi/2
  double hi = M_PI;
  std::vector<RingElem> prev;
  RingElem w_prev = RingElem::one(RingTag::Trig);

  auto stage_image_numerator = [&prev](const RingElem& col) {
    if (prev.empty()) return col;
    std::vector<RingElem> cols = prev;
    cols.push_back(col);
    return wronskian(std::span<const RingElem>(cols));
  };

  for (const auto& seed : chain.seeds) {
    survivors.erase(seed.k);
    RingElem seed_elem = seed.realize();
    RingElem w_img = stage_image_numerator(seed_elem);
    if (w_img.is_zero())
      throw std::invalid_argument("predict_filtered_spectrum: degenerate seed image");

    bool singular_at_half_pi = false;
    if (hi > M_PI / 2 + 1e-12) {
      Rational img_val = w_img.trig().eval_at(c_half, s_half);
      Rational base_val = w_prev.trig().eval_at(c_half, s_half);
      if (base_val.is_zero())
        throw std::logic_error("predict_filtered_spectrum: stage denominator vanishes at pi/2");
      singular_at_half_pi = img_val.is_zero();
    }

    // The stage image must have no interior nodes other than pi/2; scan
    // the sign of image*denominator away from the endpoints.
    {
      const int samples = 2000;
      double prev_val = 0.0;
      bool have_prev = false;
      for (int i = 1; i < samples; ++i) {
        double x = hi * static_cast<double>(i) / samples;
        if (x < 1e-3 || x > hi - 1e-3) continue;
        if (singular_at_half_pi && std::fabs(x - M_PI / 2) < 2e-2) {
          have_prev = false;
          continue;
        }
        double val = static_cast<double>(w_img.eval(x) * w_prev.eval(x));
        if (have_prev && val * prev_val < 0.0)
          throw std::invalid_argument(
              "predict_filtered_spectrum: seed image has a node away from pi/2 (unsupported chain)");
        prev_val = val;
        have_prev = true;
      }
    }

    if (singular_at_half_pi) {
      // Dirichlet filter at the new strong singularity: a level survives
      // iff its current stage image vanishes at pi/2 too.
      for (auto it = survivors.begin(); it != survivors.end();) {
        RingElem level_img = stage_image_numerator(RingElem(TrigPoly::sin_kx(*it)));
        if (level_img.trig().eval_at(c_half, s_half).is_zero())
          ++it;
        else
          it = survivors.erase(it);
      }
      hi = M_PI / 2;
    }

    prev.push_back(std::move(seed_elem));
    w_prev = std::move(w_img);
  }

  std::vector<FilteredLevel> out;
  for (int k : survivors)
    out.push_back({k, static_cast<long>(k) * k, "sin(" + std::to_string(k) + "x)"});
  return out;
}

}  // namespace darboux
