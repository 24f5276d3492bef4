#pragma once

#include "siegelmult/half_space.hpp"

namespace siegelmult {

// Integer cocycle value with the evidence for rounding it.
struct CocycleValue {
  long w = 0;
  double raw = 0.0;       // pre-rounding value
  double residual = 0.0;  // |raw - w|
  int path_steps = 0;     // segments used by the continuation
};

// exp(2 pi i r w); exactly 1 when r*w is integral.
struct WeightedFactor {
  double r = 0.0;
  Complex value{1.0, 0.0};
};

constexpr double kPi = 3.14159265358979323846;
constexpr double kRoundingGuard = 1e-6;

// Principal value in (-pi, pi].
double principal_arg(Complex z);

struct ContinuationOptions {
  double max_step = kPi / 2;  // bound on |Arg(J(t1)/J(t0))| per accepted step
  int initial_segments = 8;
  int max_depth = 40;
};

struct ContinuedArgument {
  double value = 0.0;
  int steps = 0;
};

// Continuous argument of J(M, .) along the segment iE -> Z, starting at the principal value at iE.
ContinuedArgument continue_argument(const RealSymplecticMatrix& m, const SiegelPoint& z,
                                    const ContinuationOptions& options = {});
double L_value(const RealSymplecticMatrix& m, const SiegelPoint& z);
double L_value(const SymplecticMatrix& m, const SiegelPoint& z);

// w(M, N) = (Arg J(MN, iE) - L(M, N iE) - Arg J(N, iE)) / 2 pi, the defining formula.
// Retries with a finer step bound before raising ResidualGuardError.
CocycleValue w_cocycle(const SymplecticMatrix& m, const SymplecticMatrix& n);
CocycleValue w_cocycle(const RealSymplecticMatrix& m, const RealSymplecticMatrix& n);

// The same quantity evaluated at an arbitrary base point Z:
// (L(MN, Z) - L(M, NZ) - L(N, Z)) / 2 pi, every L continued from iE.
CocycleValue w_cocycle_at(const SymplecticMatrix& m, const SymplecticMatrix& n, const SiegelPoint& z);

// Sign convention in which automorphy factors v(M) J(M,Z)^r satisfy
// v(MN) = v(M) v(N) exp(2 pi i r w). It is the negative of w_cocycle and is the
// convention of the genus-1 case table.
CocycleValue automorphy_cocycle(const SymplecticMatrix& m, const SymplecticMatrix& n);

enum class CocycleConvention { Definition, Automorphy };
CocycleValue cocycle(const SymplecticMatrix& m, const SymplecticMatrix& n, CocycleConvention convention);

WeightedFactor sigma_of(double r, long w);
// sigma_r(M, N) = exp(2 pi i r w(M, N)) with w in the automorphy convention.
WeightedFactor sigma_factor(double r, const SymplecticMatrix& m, const SymplecticMatrix& n);

struct CocycleIdentityReport {
  bool holds = false;
  CocycleValue w12_3;  // w(M1 M2, M3)
  CocycleValue w1_2;   // w(M1, M2)
  CocycleValue w1_23;  // w(M1, M2 M3)
  CocycleValue w2_3;   // w(M2, M3)
};

// w(M1M2, M3) + w(M1, M2) == w(M1, M2M3) + w(M2, M3).
CocycleIdentityReport cocycle_identity_check(const SymplecticMatrix& m1, const SymplecticMatrix& m2,
                                             const SymplecticMatrix& m3);

}  // namespace siegelmult
