#include "siegelmult/multipliers.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/float128.hpp>

#include "siegelmult/arithmetic.hpp"
#include "siegelmult/errors.hpp"
#include "siegelmult/genus1_table.hpp"

namespace siegelmult {

std::string to_string(ThetaConvention c) { return c == ThetaConvention::Standard ? "standard" : "doubled"; }

namespace {

double exponent_scale(ThetaConvention c) { return c == ThetaConvention::Standard ? kPi : 2 * kPi; }

double max_pairwise(const std::vector<Complex>& v) {
  double worst = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) worst = std::max(worst, std::abs(v[i] - v[j]));
  return worst;
}

Complex mean(const std::vector<Complex>& v) {
  Complex s(0.0, 0.0);
  for (const auto& x : v) s += x;
  return s / static_cast<double>(v.size());
}

// sum_{|k| > n} e^{-a k^2}
double one_dim_tail(double a, int n) {
  const double k = n + 1.0;
  return 2.0 * std::exp(-a * k * k) / (1.0 - std::exp(-a * (2.0 * k + 1.0)));
}

// bound on sum_{|k| >= 0} e^{-a k^2}
double one_dim_total(double a) { return 1.0 + std::sqrt(kPi / a); }

using Quad = boost::multiprecision::float128;
template <typename R>
using Mat = Eigen::Matrix<R, Eigen::Dynamic, Eigen::Dynamic>;

template <typename R>
const R kPiR = static_cast<R>(boost::math::constants::pi<Quad>());

// Z = X + iY in extended precision. Near a cusp where theta vanishes the lattice sum cancels
// by many orders of magnitude, so every input of the sum (MZ included) needs the same precision.
template <typename R>
struct Point {
  Mat<R> x, y;
  int genus() const { return static_cast<int>(x.rows()); }
};

template <typename R>
Mat<R> symmetrized(const Mat<R>& m) {
  return (m + m.transpose()) / R(2);
}

template <typename R>
Mat<R> to_real(const IntMatrix& m) {
  Mat<R> out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = static_cast<R>(m(i, j).get_d());
  return out;
}

template <typename R>
Point<R> to_real(const SiegelPoint& z) {
  return {z.real().cast<R>(), z.imag().cast<R>()};
}

template <typename R>
SiegelPoint to_point(const Point<R>& p) {
  CMatrix z(p.genus(), p.genus());
  z.real() = p.x.template cast<double>();
  z.imag() = p.y.template cast<double>();
  return SiegelPoint::make(z);
}

// V'ZV
template <typename R>
Point<R> congruent(const Point<R>& z, const IntMatrix& v) {
  const Mat<R> vv = to_real<R>(v);
  return {symmetrized<R>(vv.transpose() * z.x * vv), symmetrized<R>(vv.transpose() * z.y * vv)};
}

// (AZ + B)(CZ + D)^{-1} through the real form of the complex matrices.
template <typename R>
Point<R> act_real(const SymplecticMatrix& m, const Point<R>& z) {
  const Mat<R> full = to_real<R>(m.matrix());
  const int g = z.genus();
  const Mat<R> a = full.block(0, 0, g, g), b = full.block(0, g, g, g);
  const Mat<R> c = full.block(g, 0, g, g), d = full.block(g, g, g, g);
  auto embed = [g](const Mat<R>& re, const Mat<R>& im) {
    Mat<R> out(2 * g, 2 * g);
    out << re, -im, im, re;
    return out;
  };
  const Mat<R> num = embed(a * z.x + b, a * z.y);
  const Mat<R> den = embed(c * z.x + d, c * z.y);
  Eigen::FullPivLU<Mat<R>> lu(den.transpose());
  if (!lu.isInvertible()) throw Error("theta: CZ + D is singular");
  const Mat<R> w = lu.solve(num.transpose()).transpose();
  return {symmetrized<R>(w.block(0, 0, g, g)), symmetrized<R>(w.block(g, 0, g, g))};
}

// det(CZ + D) by elimination on the real and imaginary parts.
template <typename R>
std::pair<R, R> j_real(const SymplecticMatrix& m, const Point<R>& z) {
  const Mat<R> full = to_real<R>(m.matrix());
  const int g = z.genus();
  const Mat<R> c = full.block(g, 0, g, g);
  Mat<R> re = c * z.x + full.block(g, g, g, g);
  Mat<R> im = c * z.y;
  R dr(1), di(0);
  for (int k = 0; k < g; ++k) {
    int p = k;
    for (int i = k + 1; i < g; ++i)
      if (re(i, k) * re(i, k) + im(i, k) * im(i, k) > re(p, k) * re(p, k) + im(p, k) * im(p, k)) p = i;
    if (p != k) {
      re.row(k).swap(re.row(p));
      im.row(k).swap(im.row(p));
      dr = -dr;
      di = -di;
    }
    const R pr = re(k, k), pi = im(k, k), norm = pr * pr + pi * pi;
    if (norm == 0) throw Error("theta: CZ + D is singular");
    const R t = dr * pr - di * pi;
    di = dr * pi + di * pr;
    dr = t;
    for (int i = k + 1; i < g; ++i) {
      const R fr = (re(i, k) * pr + im(i, k) * pi) / norm, fi = (im(i, k) * pr - re(i, k) * pi) / norm;
      for (int j = k; j < g; ++j) {
        const R ar = re(k, j), ai = im(k, j);
        re(i, j) -= fr * ar - fi * ai;
        im(i, j) -= fr * ai + fi * ar;
      }
    }
  }
  return {dr, di};
}

// Lagrange-Gauss reduction of the form Y (genus 2); identity otherwise.
template <typename R>
IntMatrix reduction_basis(const Mat<R>& y0) {
  const int g = static_cast<int>(y0.rows());
  if (g != 2) return IntMatrix::identity(g);
  const Mat<long double> y = y0.template cast<long double>();
  long long b1[2] = {1, 0}, b2[2] = {0, 1};
  auto form = [&](const long long* u, const long long* v) {
    long double s = 0.0L;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) s += static_cast<long double>(u[i]) * y(i, j) * static_cast<long double>(v[j]);
    return s;
  };
  for (int it = 0; it < 200; ++it) {
    if (form(b2, b2) < form(b1, b1)) std::swap(b1, b2);
    const long long mu = std::llround(form(b1, b2) / form(b1, b1));
    if (mu == 0) break;
    b2[0] -= mu * b1[0];
    b2[1] -= mu * b1[1];
  }
  IntMatrix v(2, 2);
  v(0, 0) = static_cast<long>(b1[0]);
  v(1, 0) = static_cast<long>(b1[1]);
  v(0, 1) = static_cast<long>(b2[0]);
  v(1, 1) = static_cast<long>(b2[1]);
  return v;
}

template <typename R>
Point<R> reduced(const Point<R>& z) {
  return congruent<R>(z, reduction_basis<R>(z.y));
}

template <typename R>
double min_eigenvalue(const Mat<R>& y) {
  Eigen::SelfAdjointEigenSolver<RMatrix> es(y.template cast<double>());
  return es.eigenvalues().minCoeff();
}

// Reduce Re Z by a period of the series so the phases stay small.
template <typename R>
Mat<R> reduced_real(const Mat<R>& x0, ThetaConvention convention) {
  Mat<R> x = x0;
  const int g = static_cast<int>(x.rows());
  for (int i = 0; i < g; ++i) {
    for (int j = i; j < g; ++j) {
      const R period = (i == j && convention == ThetaConvention::Standard) ? R(2) : R(1);
      using std::round;
      const R v = x(i, j) - period * round(x(i, j) / period);
      x(i, j) = v;
      x(j, i) = v;
    }
  }
  return x;
}

// x = hi + lo with hi on a 2^-24 grid: for |k| < 2^35, k * hi is exact in long double and quad,
// so phases reduce mod 2 without rounding however far out the lattice point is.
template <typename R>
std::pair<Mat<R>, Mat<R>> split_real(const Mat<R>& x) {
  Mat<R> hi = x;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    using std::ldexp, std::round;
    hi(i) = ldexp(round(ldexp(x(i), 24)), -24);
  }
  return {hi, x - hi};
}

template <typename R>
struct LatticeSum {
  const Mat<R>& r;  // upper triangular, Im Z = r' r
  const Mat<R>& hi;
  const Mat<R>& lo;
  R scale;
  R budget;  // bound on |r n|^2
  int radius;
  std::vector<long> n;
  R re{0}, im{0};
  R magnitude{0};  // sum of |terms|, the scale of the cancellation
  R largest{0};    // largest |phase| carried into the rounded part

  void run(int i, const R& partial) {
    using std::ceil, std::cos, std::exp, std::floor, std::fmod, std::sin, std::sqrt;
    const int g = static_cast<int>(n.size());
    if (i < 0) {
      R units(0);  // n'Xn mod 2
      for (int a = 0; a < g; ++a) {
        for (int b = a; b < g; ++b) {
          const R k = R((a == b ? 1 : 2) * n[a] * n[b]);
          units += fmod(k * hi(a, b), R(2)) + k * lo(a, b);
        }
      }
      using std::abs;
      largest = std::max(largest, R(abs(units)));
      const R phase = units * scale;
      const R mod = exp(-scale * partial);
      re += mod * cos(phase);
      im += mod * sin(phase);
      magnitude += mod;
      return;
    }
    R shift(0);
    for (int j = i + 1; j < g; ++j) shift += r(i, j) * R(n[j]);
    const R room = budget - partial;
    if (room < 0) return;
    const R half = sqrt(room) / r(i, i);
    const R centre = -shift / r(i, i);
    const long lo = std::max<long>(-radius, static_cast<long>(ceil(centre - half)));
    const long hi = std::min<long>(radius, static_cast<long>(floor(centre + half)));
    for (long k = lo; k <= hi; ++k) {
      n[i] = k;
      const R comp = r(i, i) * R(k) + shift;
      run(i - 1, partial + comp * comp);
    }
    n[i] = 0;
  }
};

double box_tail(double lambda, int g, int radius, ThetaConvention convention) {
  if (radius < 0) throw PreconditionError("theta: truncation radius must be non-negative");
  const double a = exponent_scale(convention) * lambda;
  if (!(a > 0)) throw TruncationError("theta: Im Z is numerically singular");
  return g * one_dim_tail(a, radius) * std::pow(one_dim_total(a), g - 1);
}

int radius_for(double lambda, int g, ThetaConvention convention, double tolerance) {
  for (int n = 1; n <= 100000; n = n < 64 ? n + 1 : n + n / 8) {
    if (box_tail(lambda, g, n, convention) < tolerance) return n;
  }
  throw TruncationError("theta: no radius below 100000 reaches the tail tolerance");
}

template <typename R>
struct SumResult {
  std::complex<R> value;
  double cancellation = 1.0;  // sum |terms| / |sum|
  double phase_error = 0.0;   // rounding in the largest phase, relative to the sum
};

// Sum over the box |n_i| <= radius of the (already reduced) point; terms with
// scale * n'Yn > t are pruned, their total being at most e^{-t/2} (1 + sqrt(2 pi / (scale lambda)))^g.
template <typename R>
SumResult<R> lattice_sum(const Point<R>& z, double lambda, int radius, ThetaConvention convention, double& tail,
                         double pruned = 1e-17) {
  const int g = z.genus();
  const double scale = exponent_scale(convention);
  const double box = box_tail(lambda, g, radius, convention);
  const double per_dim = std::log1p(std::sqrt(2 * kPi / (scale * lambda)));
  const double t = 2.0 * (-std::log(pruned) + g * per_dim);
  tail = box + std::exp(-t / 2 + g * per_dim);
  if (!(tail < kSeriesTolerance)) {
    std::ostringstream os;
    os << "theta: radius " << radius << " leaves tail bound " << tail << " (need < " << kSeriesTolerance << ")";
    throw TruncationError(os.str());
  }
  Eigen::LLT<Mat<R>> llt(z.y);
  if (llt.info() != Eigen::Success) throw TruncationError("theta: Cholesky factorization of Im Z failed");
  const Mat<R> r = llt.matrixU();
  const auto [hi, lo] = split_real<R>(reduced_real<R>(z.x, convention));
  const R scale_r = convention == ThetaConvention::Standard ? kPiR<R> : R(2) * kPiR<R>;
  if (radius > 100000) throw TruncationError("theta: truncation radius above 100000");
  LatticeSum<R> sum{r, hi, lo, scale_r, R(t) / scale_r, radius, std::vector<long>(g, 0)};
  sum.run(g - 1, R(0));
  SumResult<R> out{{sum.re, sum.im}};
  const double size = std::hypot(static_cast<double>(sum.re), static_cast<double>(sum.im));
  out.cancellation = size > 0 ? static_cast<double>(sum.magnitude) / size : std::numeric_limits<double>::infinity();
  out.phase_error = kPi * static_cast<double>(sum.largest) * static_cast<double>(std::numeric_limits<R>::epsilon()) *
                    out.cancellation;
  return out;
}

template <typename R>
Complex to_complex(const std::complex<R>& v) {
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

template <typename R>
SumResult<R> theta_auto(const Point<R>& raw, ThetaConvention convention) {
  const Point<R> z = reduced<R>(raw);
  const double lambda = min_eigenvalue<R>(z.y);
  // The tail must be small relative to |theta|, which is tiny near a cusp where theta vanishes.
  double target = 1e-17;
  for (int pass = 0;; ++pass) {
    const int radius = std::max(12, radius_for(lambda, z.genus(), convention, 100 * target));
    double tail = 0.0;
    const SumResult<R> out = lattice_sum<R>(z, lambda, radius, convention, tail, target);
    const double size = std::abs(to_complex(out.value));
    if (tail < 1e-15 * size || pass == 3 || size == 0) return out;
    target = std::min(target, 1e-19 * size);
  }
}

// Long double keeps about 19 digits; past this cancellation, or when the phases of far lattice
// points carry rounding above kPhaseLimit, the sum is redone in quad precision.
constexpr double kCancellationLimit = 1e3;
constexpr double kPhaseLimit = 1e-14;

template <typename R>
bool trusted(const SumResult<R>& s) {
  return s.cancellation <= kCancellationLimit && s.phase_error <= kPhaseLimit;
}

// One sample of theta(MZ) / (J^{1/2} theta(Z)). MZ is formed from the raw sample, which is well
// conditioned by construction; theta_auto reduces each argument on its own.
// Returns nullopt when the long double sums cannot be trusted.
template <typename R>
std::optional<Complex> theta_ratio(const SymplecticMatrix& m, const RealSymplecticMatrix& rm,
                                   const SiegelPoint& sample, ThetaConvention convention, bool check, BranchLog& b) {
  const Point<R> z = to_real<R>(sample);
  const SiegelPoint& zd = sample;
  const Point<R> mz = act_real<R>(m, z);
  const SumResult<R> top = theta_auto<R>(mz, convention);
  const SumResult<R> bottom = theta_auto<R>(z, convention);
  if (check && !(trusted(top) && trusted(bottom))) return std::nullopt;
  // the continuation in double fixes the branch; J itself is taken in R
  const auto [jr, ji] = j_real<R>(m, z);
  const Complex j(static_cast<double>(jr), static_cast<double>(ji));
  const double arg = principal_arg(j);
  b = {std::log(std::abs(j)), arg + 2 * kPi * std::round((L_value(rm, zd) - arg) / (2 * kPi))};
  const Complex root = std::exp(0.5 * Complex(b.log_abs, b.arg));
  return to_complex(top.value) / to_complex(bottom.value) / root;
}

}  // namespace

double theta_box_tail(const SiegelPoint& z, int radius, ThetaConvention convention) {
  const auto r = reduced<long double>(to_real<long double>(z));
  return box_tail(min_eigenvalue<long double>(r.y), r.genus(), radius, convention);
}

int theta_radius_for(const SiegelPoint& z, ThetaConvention convention, double tolerance) {
  const auto r = reduced<long double>(to_real<long double>(z));
  return radius_for(min_eigenvalue<long double>(r.y), r.genus(), convention, tolerance);
}

Complex theta_value(const SiegelPoint& z, SeriesTruncation& trunc, ThetaConvention convention) {
  const auto r = reduced<long double>(to_real<long double>(z));
  const double lambda = min_eigenvalue<long double>(r.y);
  const auto v = lattice_sum<long double>(r, lambda, trunc.radius, convention, trunc.tail_bound);
  if (trusted(v)) return to_complex(v.value);
  const auto q = reduced<Quad>(to_real<Quad>(z));
  return to_complex(lattice_sum<Quad>(q, lambda, trunc.radius, convention, trunc.tail_bound).value);
}

Complex theta_value(const SiegelPoint& z, ThetaConvention convention) {
  const auto v = theta_auto<long double>(to_real<long double>(z), convention);
  if (trusted(v)) return to_complex(v.value);
  return to_complex(theta_auto<Quad>(to_real<Quad>(z), convention).value);
}

bool is_theta_group(const SymplecticMatrix& m) {
  const IntMatrix ab = m.a() * m.b().transpose();
  const IntMatrix cd = m.c() * m.d().transpose();
  for (int i = 0; i < m.genus(); ++i) {
    if (mpz_odd_p(ab(i, i).get_mpz_t()) || mpz_odd_p(cd(i, i).get_mpz_t())) return false;
  }
  return true;
}

std::vector<SiegelPoint> theta_samples(const SymplecticMatrix& m) {
  const int g = m.genus();
  const auto back = RealSymplecticMatrix::from_exact(inverse(m));
  std::vector<SiegelPoint> out;
  for (const auto& [s, x] : {std::pair{1.0, 0.0}, {1.25, 0.1}, {0.8, -0.15}, {1.1, 0.3}, {0.9, -0.25}}) {
    const CMatrix w = Complex(0.0, s) * CMatrix::Identity(g, g) + Complex(x, 0.0) * CMatrix::Ones(g, g);
    out.push_back(act(back, SiegelPoint::make(w)));
  }
  return out;
}

MultiplierEvaluation evaluate_theta_multiplier(const SymplecticMatrix& m, const std::vector<SiegelPoint>& samples,
                                               ThetaConvention convention) {
  if (samples.empty()) throw PreconditionError("theta_multiplier: no sample points");
  const auto rm = RealSymplecticMatrix::from_exact(m);
  MultiplierEvaluation ev;
  for (const auto& sample : samples) {
    BranchLog b;
    std::optional<Complex> v = theta_ratio<long double>(m, rm, sample, convention, true, b);
    if (!v) v = theta_ratio<Quad>(m, rm, sample, convention, false, b);
    ev.sample_values.push_back(*v);
    ev.branch_log.push_back(b);
  }
  ev.value = mean(ev.sample_values);
  ev.deviation = max_pairwise(ev.sample_values);
  return ev;
}

MultiplierEvaluation theta_multiplier(const SymplecticMatrix& m, const std::vector<SiegelPoint>& samples,
                                      ThetaConvention convention) {
  if (!is_theta_group(m)) throw PreconditionError("theta_multiplier: " + m.literal() + " is not in the theta group");
  MultiplierEvaluation ev = evaluate_theta_multiplier(m, samples, convention);
  if (!(ev.deviation < kMultiplierTolerance) || !(std::abs(std::abs(ev.value) - 1.0) < kMultiplierTolerance)) {
    std::ostringstream os;
    os << "theta_multiplier: value depends on Z (deviation " << ev.deviation << ", |v| = " << std::abs(ev.value)
       << ") for " << m.literal();
    throw MultiplierError(os.str());
  }
  return ev;
}

namespace {

// The SL(2) block of a genus 1 matrix or of an iota1 / iota2 image in genus 2.
std::optional<SymplecticMatrix> genus1_block(const SymplecticMatrix& m) {
  if (m.genus() == 1) return m;
  if (m.genus() != 2) return std::nullopt;
  for (int keep : {0, 1}) {
    const int other = 1 - keep;
    bool fixed = true;
    for (int i = 0; i < 4 && fixed; ++i) {
      for (int j : {other, other + 2}) {
        const bool diag = i == j;
        if (m(i, j) != (diag ? 1 : 0) || m(j, i) != (diag ? 1 : 0)) fixed = false;
      }
    }
    if (fixed) return sl2(m(keep, keep), m(keep, keep + 2), m(keep + 2, keep), m(keep + 2, keep + 2));
  }
  return std::nullopt;
}

Complex classical_value(const SymplecticMatrix& m) {
  const BigInt a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
  const SymplecticMatrix minus = sl2(-1, 0, 0, -1);
  const Complex v_minus(0.0, -1.0);
  auto times = [](const SymplecticMatrix& x, Complex vx, const SymplecticMatrix& y, Complex vy) {
    return vx * vy * sigma_of(0.5, genus1_cocycle(x, y)).value;
  };
  if (c == 0) {
    if (a == 1) return 1.0;
    return times(minus, v_minus, negate(m), 1.0);
  }
  if (c < 0) {
    const SymplecticMatrix n = negate(m);
    return times(minus, v_minus, n, classical_value(n));
  }
  if (mpz_odd_p(c.get_mpz_t())) {
    // M = M1 S with M1 = M S^{-1}
    const SymplecticMatrix s = sl2(0, -1, 1, 0);
    const SymplecticMatrix m1 = sl2(-b, a, -d, c);
    return times(m1, classical_value(m1), s, std::polar(1.0, -kPi / 4));
  }
  const BigInt r = d % 4;
  const Complex eps = (r == 1 || r == -3) ? Complex(1.0, 0.0) : Complex(0.0, 1.0);
  return static_cast<double>(kronecker(2 * c, abs(d))) / eps;
}

}  // namespace

MultiplierEvaluation theta_multiplier_classical(const SymplecticMatrix& m) {
  if (!is_theta_group(m)) throw PreconditionError("theta_multiplier: " + m.literal() + " is not in the theta group");
  const auto block = genus1_block(m);
  if (!block) throw PreconditionError("theta_multiplier_classical: " + m.literal() + " has no SL(2) block");
  MultiplierEvaluation ev;
  ev.value = classical_value(*block);
  return ev;
}

MultiplierEvaluation theta_multiplier(const SymplecticMatrix& m, ThetaConvention convention) {
  if (convention == ThetaConvention::Standard && is_theta_group(m)) {
    // samples of a block with large c need lattice radii of about 3.4 |c|
    if (const auto block = genus1_block(m); block && abs((*block)(1, 0)) > kClassicalFrom)
      return theta_multiplier_classical(m);
  }
  return theta_multiplier(m, theta_samples(m), convention);
}

double delta_tail(const SiegelPoint& z, int terms) {
  if (z.genus() != 1) throw GenusMismatchError("delta: genus-1 point required");
  const double q = std::exp(-2 * kPi * z.z()(0, 0).imag());
  const double qn = std::pow(q, terms + 1.0);
  return 24.0 * qn / ((1.0 - q) * (1.0 - qn));
}

int delta_terms_for(const SiegelPoint& z, double tolerance) {
  if (z.genus() != 1) throw GenusMismatchError("delta: genus-1 point required");
  const double y = z.z()(0, 0).imag();
  if (!(y > 1e-7)) throw TruncationError("delta: Im z too small for a desk-scale term budget");
  int n = std::max(1, static_cast<int>(std::ceil(std::log(1e14 / tolerance) / (2 * kPi * y))) / 2);
  while (delta_tail(z, n) >= tolerance) n += 1 + n / 16;
  return n;
}

Complex delta_log(const SiegelPoint& z, int terms) {
  if (z.genus() != 1) throw GenusMismatchError("delta_log: genus-1 point required");
  if (terms < 1) throw PreconditionError("delta_log: term count must be positive");
  const double tail = delta_tail(z, terms);
  if (!(tail < kSeriesTolerance)) {
    std::ostringstream os;
    os << "delta_log: " << terms << " terms leave tail bound " << tail;
    throw TruncationError(os.str());
  }
  const Complex zz = z.z()(0, 0);
  const double x = zz.real() - std::floor(zz.real());
  const double y = zz.imag();
  Complex series(0.0, 0.0);
  for (int n = terms; n >= 1; --n) {  // small terms first
    const double phase = 2 * kPi * std::fmod(n * x, 1.0);
    const Complex qn = std::polar(std::exp(-2 * kPi * n * y), phase);
    series += std::log(Complex(1.0, 0.0) - qn);
  }
  return Complex(0.0, 2 * kPi) * zz + 24.0 * series;
}

Complex delta_log(const SiegelPoint& z) { return delta_log(z, std::max(60, delta_terms_for(z))); }

namespace {

SiegelPoint point1(Complex z) {
  CMatrix m(1, 1);
  m(0, 0) = z;
  return SiegelPoint::make(m);
}

}  // namespace

RademacherValue rademacher_value(const SymplecticMatrix& m) {
  if (m.genus() != 1) throw GenusMismatchError("rademacher_integer: genus-1 matrix required");
  const double c = m(1, 0).get_d(), d = m(1, 1).get_d();
  RademacherValue rv;
  if (c == 0) {
    rv.samples = {point1({0.0, 1.0}), point1({0.0, 2.0}), point1({0.5, 1.0})};
  } else {
    for (double t : {1.0, 1.25, 0.8}) rv.samples.push_back(point1({-d / c, t / std::abs(c)}));
  }
  const auto rm = RealSymplecticMatrix::from_exact(m);
  const Complex two_pi_i(0.0, 2 * kPi);
  for (const auto& z : rv.samples) {
    const Complex j = j_factor(rm, z);
    const double l = L_value(rm, z);
    const Complex num = delta_log(act(rm, z)) - delta_log(z) - 12.0 * Complex(std::log(std::abs(j)), l);
    rv.raw.push_back(num / two_pi_i);
  }
  rv.d = std::lround(rv.raw.front().real());
  for (const auto& v : rv.raw) rv.residual = std::max(rv.residual, std::abs(v - Complex(static_cast<double>(rv.d), 0)));
  if (!(rv.residual < kRoundingGuard)) {
    std::ostringstream os;
    os << "rademacher_integer: samples give a non-integral or z-dependent value (residual " << rv.residual
       << ") for " << m.literal();
    throw MultiplierError(os.str());
  }
  return rv;
}

long rademacher_integer(const SymplecticMatrix& m) { return rademacher_value(m).d; }

MultiplierEvaluation delta_multiplier(double r, const SymplecticMatrix& m) {
  const RademacherValue rv = rademacher_value(m);
  const auto rm = RealSymplecticMatrix::from_exact(m);
  MultiplierEvaluation ev;
  const double x = r * static_cast<double>(rv.d) / 12.0;
  ev.value = std::polar(1.0, 2 * kPi * (x - std::floor(x)));
  for (std::size_t k = 0; k < rv.raw.size(); ++k) {
    const Complex dx = r * (rv.raw[k] - Complex(static_cast<double>(rv.d), 0.0)) / 12.0;
    ev.sample_values.push_back(ev.value * std::exp(Complex(0.0, 2 * kPi) * dx));
    const Complex j = j_factor(rm, rv.samples[k]);
    ev.branch_log.push_back({std::log(std::abs(j)), L_value(rm, rv.samples[k])});
  }
  ev.deviation = max_pairwise(ev.sample_values);
  return ev;
}

RelationReport verify_multiplier_relation(const MultiplierEvaluator& evaluator, double r,
                                          const std::vector<std::pair<SymplecticMatrix, SymplecticMatrix>>& pairs,
                                          double tolerance) {
  RelationReport report;
  report.r = r;
  for (const auto& [m, n] : pairs) {
    const SymplecticMatrix mn = m * n;
    const long w = automorphy_cocycle(m, n).w;
    const Complex lhs = evaluator(mn).value;
    const Complex rhs = evaluator(m).value * evaluator(n).value * sigma_of(r, w).value;
    const double dev = std::abs(lhs - rhs);
    report.records.push_back({m, n, w, lhs, rhs, dev});
    report.worst_deviation = std::max(report.worst_deviation, dev);
    if (!(dev < tolerance)) report.holds = false;
  }
  return report;
}

}  // namespace siegelmult
