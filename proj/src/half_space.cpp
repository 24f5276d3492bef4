#include "siegelmult/half_space.hpp"

#include <cmath>

#include "siegelmult/errors.hpp"

namespace siegelmult {

bool leading_minors_positive(const RMatrix& y, double tolerance) {
  for (Eigen::Index k = 1; k <= y.rows(); ++k) {
    if (y.topLeftCorner(k, k).determinant() <= tolerance) return false;
  }
  return true;
}

SiegelPoint SiegelPoint::make(const CMatrix& z) {
  if (z.rows() == 0 || z.rows() != z.cols()) throw PreconditionError("SiegelPoint: Z must be square and non-empty");
  const double scale = std::max(1.0, z.cwiseAbs().maxCoeff());
  if ((z - z.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw PreconditionError("SiegelPoint: Z is not symmetric");
  CMatrix sym = (z + z.transpose()) / 2.0;
  if (!leading_minors_positive(sym.imag()))
    throw PreconditionError("SiegelPoint: Im Z is not positive definite");
  return SiegelPoint(std::move(sym));
}

SiegelPoint SiegelPoint::scaled_i(int genus, double s) {
  if (genus < 1 || !(s > 0)) throw PreconditionError("SiegelPoint::scaled_i: need genus >= 1 and s > 0");
  CMatrix z = CMatrix::Identity(genus, genus) * Complex(0.0, s);
  return SiegelPoint(std::move(z));
}

double SiegelPoint::min_imag_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<RMatrix> es(imag());
  return es.eigenvalues().minCoeff();
}

namespace {

RMatrix real_block(const RealSymplecticMatrix& m, int row0, int col0) {
  const int g = m.genus();
  RMatrix out(g, g);
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) out(i, j) = m(row0 + i, col0 + j);
  return out;
}

void require_same_genus(int a, int b, const char* who) {
  if (a != b) throw GenusMismatchError(std::string(who) + ": genus " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

RMatrix block_a(const RealSymplecticMatrix& m) { return real_block(m, 0, 0); }
RMatrix block_b(const RealSymplecticMatrix& m) { return real_block(m, 0, m.genus()); }
RMatrix block_c(const RealSymplecticMatrix& m) { return real_block(m, m.genus(), 0); }
RMatrix block_d(const RealSymplecticMatrix& m) { return real_block(m, m.genus(), m.genus()); }

SiegelPoint act(const RealSymplecticMatrix& m, const SiegelPoint& z) {
  require_same_genus(m.genus(), z.genus(), "act");
  const CMatrix a = block_a(m).cast<Complex>(), b = block_b(m).cast<Complex>();
  const CMatrix c = block_c(m).cast<Complex>(), d = block_d(m).cast<Complex>();
  const CMatrix denom = c * z.z() + d;
  Eigen::FullPivLU<CMatrix> lu(denom);
  if (!lu.isInvertible()) throw Error("act: CZ + D is singular (corrupted or non-symplectic input)");
  const CMatrix q = lu.inverse();
  const CMatrix w = (a * z.z() + b) * q;
  RMatrix x = w.real();
  x = (x + x.transpose()).eval() / 2.0;
  const CMatrix yq = q.adjoint() * z.imag().cast<Complex>() * q;
  RMatrix y = yq.real();
  y = (y + y.transpose()).eval() / 2.0;
  if (!leading_minors_positive(y, 0.0)) throw Error("act: image left the half-space (numerical breakdown)");
  CMatrix out(z.genus(), z.genus());
  out.real() = x;
  out.imag() = y;
  return SiegelPoint(std::move(out));
}

SiegelPoint act(const SymplecticMatrix& m, const SiegelPoint& z) { return act(RealSymplecticMatrix::from_exact(m), z); }

Complex j_factor(const RealSymplecticMatrix& m, const SiegelPoint& z) {
  require_same_genus(m.genus(), z.genus(), "j_factor");
  const CMatrix cz = block_c(m).cast<Complex>() * z.z() + block_d(m).cast<Complex>();
  return cz.partialPivLu().determinant();
}

Complex j_factor(const SymplecticMatrix& m, const SiegelPoint& z) {
  return j_factor(RealSymplecticMatrix::from_exact(m), z);
}

Complex j_factor_on_segment(const RealSymplecticMatrix& m, const CMatrix& z_end, double t) {
  const int g = m.genus();
  const CMatrix base = CMatrix::Identity(g, g) * Complex(0.0, 1.0);
  const CMatrix zt = base + t * (z_end - base);
  const CMatrix cz = block_c(m).cast<Complex>() * zt + block_d(m).cast<Complex>();
  return cz.partialPivLu().determinant();
}

GaussianInt j_at_i_exact(const SymplecticMatrix& m) { return gaussian_determinant(m.c(), m.d()); }

std::vector<SiegelPoint> geodesic_samples(const SymplecticMatrix& m, const std::vector<double>& fractions) {
  const int g = m.genus();
  const CMatrix e = CMatrix::Identity(g, g);
  const Complex i(0.0, 1.0);
  const SiegelPoint target = act(inverse(m), SiegelPoint::scaled_i(g));
  // Cayley transform to the disk: W = (Z - iE)(Z + iE)^{-1}
  const CMatrix w = (target.z() - i * e) * (target.z() + i * e).inverse();
  const CMatrix gram = w.adjoint() * w;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(gram);
  const auto& vals = es.eigenvalues();
  const CMatrix& vecs = es.eigenvectors();

  std::vector<SiegelPoint> out;
  out.reserve(fractions.size());
  for (std::size_t k = 0; k < fractions.size(); ++k) {
    const double s = fractions[k];
    Eigen::VectorXd psi(g);
    for (int j = 0; j < g; ++j) {
      const double r = std::sqrt(std::max(0.0, std::min(vals(j), 1.0 - 1e-16)));
      psi(j) = r < 1e-300 ? s : std::tanh(s * std::atanh(r)) / r;
    }
    const CMatrix ws = w * (vecs * psi.cast<Complex>().asDiagonal() * vecs.adjoint());
    CMatrix z = i * (e + ws) * (e - ws).inverse();
    z = (z + z.transpose()).eval() / 2.0;
    // small real offset so samples stay distinct when the geodesic is degenerate
    RMatrix shift = RMatrix::Identity(g, g);
    for (int r = 0; r < g; ++r)
      for (int c = 0; c < g; ++c)
        if (r != c) shift(r, c) = 0.5;
    Eigen::SelfAdjointEigenSolver<RMatrix> ys(z.imag());
    const double lam = ys.eigenvalues().minCoeff();
    z.real() += (0.3 * static_cast<double>(k) * lam) * shift;
    out.push_back(SiegelPoint::make(z));
  }
  return out;
}

}  // namespace siegelmult
