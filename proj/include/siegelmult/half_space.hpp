#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

#include "siegelmult/symplectic.hpp"

namespace siegelmult {

using Complex = std::complex<double>;
using CMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
using RMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic>;

// Point of the Siegel upper half-space: Z symmetric with Im Z positive definite.
class SiegelPoint {
 public:
  static constexpr double kMinorTolerance = 1e-12;

  // Validates symmetry (relative 1e-12) and positive leading principal minors of Im Z.
  static SiegelPoint make(const CMatrix& z);
  // s * i * E.
  static SiegelPoint scaled_i(int genus, double s = 1.0);

  int genus() const noexcept { return static_cast<int>(z_.rows()); }
  const CMatrix& z() const noexcept { return z_; }
  RMatrix real() const { return z_.real(); }
  RMatrix imag() const { return z_.imag(); }
  double min_imag_eigenvalue() const;

 private:
  explicit SiegelPoint(CMatrix z) : z_(std::move(z)) {}
  friend SiegelPoint act(const RealSymplecticMatrix&, const SiegelPoint&);
  CMatrix z_;
};

bool leading_minors_positive(const RMatrix& y, double tolerance = SiegelPoint::kMinorTolerance);

// Block views of a symplectic matrix as floating point.
RMatrix block_a(const RealSymplecticMatrix& m);
RMatrix block_b(const RealSymplecticMatrix& m);
RMatrix block_c(const RealSymplecticMatrix& m);
RMatrix block_d(const RealSymplecticMatrix& m);

// MZ = (AZ + B)(CZ + D)^{-1}. Im(MZ) is formed as Q^H Y Q with Q = (CZ + D)^{-1}.
SiegelPoint act(const RealSymplecticMatrix& m, const SiegelPoint& z);
SiegelPoint act(const SymplecticMatrix& m, const SiegelPoint& z);

// J(M, Z) = det(CZ + D).
Complex j_factor(const RealSymplecticMatrix& m, const SiegelPoint& z);
Complex j_factor(const SymplecticMatrix& m, const SiegelPoint& z);
// Same, with Z given along the segment iE + t (Z - iE).
Complex j_factor_on_segment(const RealSymplecticMatrix& m, const CMatrix& z_end, double t);

// Exact det(iC + D) as a Gaussian integer.
GaussianInt j_at_i_exact(const SymplecticMatrix& m);

// Points W_s on the geodesic from iE to M^{-1}(iE) at the given fractions s in (0,1).
// At s = 1/2 both W and MW lie at the same distance from iE, so neither Im W nor Im MW
// degenerates; useful sample points for series that must be evaluated at W and MW.
std::vector<SiegelPoint> geodesic_samples(const SymplecticMatrix& m, const std::vector<double>& fractions);

}  // namespace siegelmult
