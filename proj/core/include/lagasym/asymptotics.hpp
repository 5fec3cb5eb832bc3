#pragma once

#include "lagasym/conformal.hpp"
#include "lagasym/equilibrium.hpp"
#include "lagasym/weight.hpp"

namespace lagasym {

// Leading-order value of an asymptotic formula plus a heuristic size of the
// first term it drops. Large prefactors are kept apart so that comparisons
// can be done without overflow: value = exp(log_prefactor) * reduced.
struct AsymptoticValue {
  cplx value;
  double neglected_scale = 0.0;
  cplx log_prefactor = 0.0;
  cplx reduced;
  double reduced_scale = 0.0;
  // Oscillation-free amplitude of `reduced`, used to normalise errors.
  double reduced_envelope = 0.0;
  // false when exp(log_prefactor) * reduced does not fit in a double.
  bool representable = true;
};

struct RecurrenceAsym {
  AsymptoticValue a_n;
  AsymptoticValue b_nm1;
};

RecurrenceAsym recurrence_asym(const EquilibriumData& eq, long n);

// Leading coefficient including the 1/n correction; log_prefactor holds
// log gamma_n and is always finite.
AsymptoticValue gamma_asym(const WeightSpec& spec, const EquilibriumData& eq, long n);

// Correction constant c in gamma_n ~ (...)(1 - c/n).
double gamma_correction(double alpha, const EquilibriumData& eq);

// Leading Plancherel-Rotach formula for p_n(beta_n z) in the given region.
// Lower half-plane points are served by conjugation; real points take
// limits from above.
AsymptoticValue pn_asym(const WeightSpec& spec, const EquilibriumData& eq, long n, cplx z,
                        RegionTag region);

}  // namespace lagasym
