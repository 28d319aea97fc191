#pragma once

#include <string>
#include <vector>

#include "darboux/rational.hpp"
#include "darboux/ring_elem.hpp"

namespace darboux {

// Symbolic description of one seed eigenfunction of the free particle.
struct SeedSpec {
  enum class Kind {
    SinK,          // sin(kx), free level k^2
    CosK,          // cos(kx), free level k^2
    PowerOdd,      // x^e with e odd, zero energy
    KDerivColumn,  // even-order derivative in the spectral parameter at k=0
  };

  Kind kind = Kind::SinK;
  int k = 1;  // wavenumber, exponent or derivative order, per kind
  std::string label;

  static SeedSpec sin_k(int k);
  static SeedSpec cos_k(int k);
  static SeedSpec power_odd(int exponent);
  static SeedSpec k_deriv(int order);

  void validate() const;
  RingElem realize() const;
  Rational energy() const;
  std::string text() const;

  bool operator==(const SeedSpec& o) const { return kind == o.kind && k == o.k; }
};

struct PotentialParams {
  enum class Family { Tdpt, Bessel, Zero };
  Family family = Family::Zero;
  int m = 0;
  int n = 0;
  double lo = 0.0;
  double hi = 0.0;
};

// Ordered seed tuple defining a transformation chain plus the potential
// the chain is expected to land on.
struct ChainSpec {
  std::vector<SeedSpec> seeds;
  PotentialParams target;
  // Set for the m == n case, whose first seed family is empty; the
  // construction is carried out as stated but certificates flag it.
  bool degenerate_equal_params = false;
};

}  // namespace darboux
