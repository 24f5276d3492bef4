#include "siegelmult/cocycle.hpp"

#include <cmath>
#include <sstream>

#include "siegelmult/errors.hpp"

namespace siegelmult {

double principal_arg(Complex z) {
  if (z == Complex(0.0, 0.0)) throw PreconditionError("principal_arg: argument is zero");
  double a = std::arg(z);
  // std::arg returns -pi for (-x, -0.0); the principal value lives in (-pi, pi].
  if (a <= -kPi) a = kPi;
  return a;
}

namespace {

class SegmentJ {
 public:
  SegmentJ(const RealSymplecticMatrix& m, const CMatrix& z_end)
      : c_(block_c(m).cast<Complex>()), d_(block_d(m).cast<Complex>()) {
    const int g = m.genus();
    base_ = CMatrix::Identity(g, g) * Complex(0.0, 1.0);
    dir_ = z_end - base_;
    end_ = z_end;
  }

  Complex operator()(double t) const {
    const CMatrix zt = t == 1.0 ? end_ : CMatrix(base_ + t * dir_);
    return (c_ * zt + d_).partialPivLu().determinant();
  }

 private:
  CMatrix c_, d_, base_, dir_, end_;
};

struct Walker {
  const SegmentJ& j;
  const ContinuationOptions& opt;
  int steps = 0;

  double walk(double t0, double t1, Complex j0, Complex j1, int depth) {
    const double delta = std::arg(j1 / j0);
    if (std::abs(delta) < opt.max_step) {
      ++steps;
      return delta;
    }
    if (depth >= opt.max_depth) {
      std::ostringstream os;
      os << "argument continuation exceeded depth " << opt.max_depth << " near t=" << t0;
      throw ContinuationError(os.str());
    }
    const double tm = 0.5 * (t0 + t1);
    const Complex jm = j(tm);
    return walk(t0, tm, j0, jm, depth + 1) + walk(tm, t1, jm, j1, depth + 1);
  }
};

}  // namespace

ContinuedArgument continue_argument(const RealSymplecticMatrix& m, const SiegelPoint& z,
                                    const ContinuationOptions& options) {
  if (m.genus() != z.genus()) throw GenusMismatchError("continue_argument: genus mismatch");
  const SegmentJ j(m, z.z());
  Walker walker{j, options};
  Complex prev = j(0.0);
  double value = principal_arg(prev);
  const int n = std::max(1, options.initial_segments);
  for (int k = 0; k < n; ++k) {
    const double t0 = static_cast<double>(k) / n;
    const double t1 = static_cast<double>(k + 1) / n;
    const Complex next = j(t1);
    value += walker.walk(t0, t1, prev, next, 0);
    prev = next;
  }
  // the walk fixes the branch; the value itself is taken at the endpoint
  const double end = principal_arg(prev);
  value = end + 2 * kPi * std::round((value - end) / (2 * kPi));
  return {value, walker.steps};
}

double L_value(const RealSymplecticMatrix& m, const SiegelPoint& z) { return continue_argument(m, z).value; }

double L_value(const SymplecticMatrix& m, const SiegelPoint& z) {
  return L_value(RealSymplecticMatrix::from_exact(m), z);
}

namespace {

CocycleValue round_guarded(double raw, int steps) {
  CocycleValue v;
  v.raw = raw;
  v.w = std::lround(raw);
  v.residual = std::abs(raw - static_cast<double>(v.w));
  v.path_steps = steps;
  return v;
}

CocycleValue evaluate_at_i(const RealSymplecticMatrix& m, const RealSymplecticMatrix& n,
                           const RealSymplecticMatrix& mn) {
  const SiegelPoint base = SiegelPoint::scaled_i(m.genus());
  const SiegelPoint n_base = act(n, base);
  const double first = principal_arg(j_factor(mn, base));
  const double last = principal_arg(j_factor(n, base));

  ContinuationOptions opt;
  ContinuedArgument mid = continue_argument(m, n_base, opt);
  CocycleValue v = round_guarded((first - mid.value - last) / (2 * kPi), mid.steps);
  if (v.residual < kRoundingGuard) return v;

  opt.max_step = kPi / 8;
  mid = continue_argument(m, n_base, opt);
  v = round_guarded((first - mid.value - last) / (2 * kPi), mid.steps);
  if (v.residual < kRoundingGuard) return v;

  std::ostringstream os;
  os.precision(17);
  os << "w_cocycle: value " << v.raw << " is not within " << kRoundingGuard << " of an integer";
  throw ResidualGuardError(os.str(), v.raw);
}

}  // namespace

CocycleValue w_cocycle(const SymplecticMatrix& m, const SymplecticMatrix& n) {
  const SymplecticMatrix mn = m * n;  // exact product, then to floating point
  return evaluate_at_i(RealSymplecticMatrix::from_exact(m), RealSymplecticMatrix::from_exact(n),
                       RealSymplecticMatrix::from_exact(mn));
}

CocycleValue w_cocycle(const RealSymplecticMatrix& m, const RealSymplecticMatrix& n) {
  if (m.genus() != n.genus()) throw GenusMismatchError("w_cocycle: genus mismatch");
  return evaluate_at_i(m, n, mul(m, n));
}

CocycleValue w_cocycle_at(const SymplecticMatrix& m, const SymplecticMatrix& n, const SiegelPoint& z) {
  const auto rm = RealSymplecticMatrix::from_exact(m);
  const auto rn = RealSymplecticMatrix::from_exact(n);
  const auto rmn = RealSymplecticMatrix::from_exact(m * n);
  const ContinuedArgument a = continue_argument(rmn, z);
  const ContinuedArgument b = continue_argument(rm, act(rn, z));
  const ContinuedArgument c = continue_argument(rn, z);
  CocycleValue v = round_guarded((a.value - b.value - c.value) / (2 * kPi), a.steps + b.steps + c.steps);
  if (v.residual >= kRoundingGuard) throw ResidualGuardError("w_cocycle_at: non-integral value", v.raw);
  return v;
}

CocycleValue automorphy_cocycle(const SymplecticMatrix& m, const SymplecticMatrix& n) {
  CocycleValue v = w_cocycle(m, n);
  v.w = -v.w;
  v.raw = -v.raw;
  return v;
}

CocycleValue cocycle(const SymplecticMatrix& m, const SymplecticMatrix& n, CocycleConvention convention) {
  return convention == CocycleConvention::Definition ? w_cocycle(m, n) : automorphy_cocycle(m, n);
}

WeightedFactor sigma_of(double r, long w) {
  WeightedFactor f;
  f.r = r;
  const double x = r * static_cast<double>(w);
  if (x == std::round(x)) return f;  // integral exponent
  f.value = std::polar(1.0, 2 * kPi * (x - std::floor(x)));
  return f;
}

WeightedFactor sigma_factor(double r, const SymplecticMatrix& m, const SymplecticMatrix& n) {
  return sigma_of(r, automorphy_cocycle(m, n).w);
}

CocycleIdentityReport cocycle_identity_check(const SymplecticMatrix& m1, const SymplecticMatrix& m2,
                                             const SymplecticMatrix& m3) {
  CocycleIdentityReport r;
  const SymplecticMatrix m12 = m1 * m2;
  const SymplecticMatrix m23 = m2 * m3;
  r.w12_3 = w_cocycle(m12, m3);
  r.w1_2 = w_cocycle(m1, m2);
  r.w1_23 = w_cocycle(m1, m23);
  r.w2_3 = w_cocycle(m2, m3);
  r.holds = r.w12_3.w + r.w1_2.w == r.w1_23.w + r.w2_3.w;
  return r;
}

}  // namespace siegelmult
