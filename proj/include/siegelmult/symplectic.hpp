#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "siegelmult/int_matrix.hpp"

namespace siegelmult {

// Principal congruence level q >= 1.
class CongruenceLevel {
 public:
  explicit CongruenceLevel(long q);
  long value() const noexcept { return q_; }

 private:
  long q_;
};

// Integral 2g x 2g matrix M with M' I M = I, I = ((0,-E),(E,0)).
// Immutable once built; every constructor validates exactly.
class SymplecticMatrix {
 public:
  // Validates; throws NotSymplecticError naming the first violated entry of M'IM - I.
  static SymplecticMatrix make(int genus, std::vector<BigInt> entries);
  static SymplecticMatrix make(const IntMatrix& m);
  static SymplecticMatrix identity(int genus);

  int genus() const noexcept { return g_; }
  int dim() const noexcept { return 2 * g_; }
  const BigInt& operator()(int i, int j) const { return m_(i, j); }
  const IntMatrix& matrix() const noexcept { return m_; }

  IntMatrix a() const { return m_.block(0, 0, g_, g_); }
  IntMatrix b() const { return m_.block(0, g_, g_, g_); }
  IntMatrix c() const { return m_.block(g_, 0, g_, g_); }
  IntMatrix d() const { return m_.block(g_, g_, g_, g_); }

  // Max |entry|; used by samplers to bound instance size.
  BigInt max_abs() const { return m_.max_abs(); }

  // Text literal "r0c0,r0c1;r1c0,..." (exact decimal integers).
  std::string literal() const;

  friend bool operator==(const SymplecticMatrix& lhs, const SymplecticMatrix& rhs) { return lhs.m_ == rhs.m_; }

 private:
  SymplecticMatrix(int g, IntMatrix m) : g_(g), m_(std::move(m)) {}
  friend SymplecticMatrix mul(const SymplecticMatrix&, const SymplecticMatrix&);
  friend SymplecticMatrix inverse(const SymplecticMatrix&);
  friend SymplecticMatrix negate(const SymplecticMatrix&);

  int g_;
  IntMatrix m_;
};

SymplecticMatrix mul(const SymplecticMatrix& lhs, const SymplecticMatrix& rhs);
inline SymplecticMatrix operator*(const SymplecticMatrix& lhs, const SymplecticMatrix& rhs) { return mul(lhs, rhs); }
// M^{-1} = I^{-1} M' I.
SymplecticMatrix inverse(const SymplecticMatrix& m);
SymplecticMatrix negate(const SymplecticMatrix& m);
SymplecticMatrix power(const SymplecticMatrix& m, long exponent);

// Real symplectic matrix (floating entries); symplecticity checked to 1e-9.
class RealSymplecticMatrix {
 public:
  static constexpr double kTolerance = 1e-9;
  static RealSymplecticMatrix make(int genus, std::vector<double> entries);
  static RealSymplecticMatrix from_exact(const SymplecticMatrix& m);

  int genus() const noexcept { return g_; }
  int dim() const noexcept { return 2 * g_; }
  double operator()(int i, int j) const {
    return e_[static_cast<std::size_t>(i) * static_cast<std::size_t>(2 * g_) + static_cast<std::size_t>(j)];
  }

 private:
  RealSymplecticMatrix(int g, std::vector<double> e) : g_(g), e_(std::move(e)) {}
  int g_;
  std::vector<double> e_;
};

RealSymplecticMatrix mul(const RealSymplecticMatrix& lhs, const RealSymplecticMatrix& rhs);

// Matrix text literal: rows separated by ';', entries by ','. Dimension must be even.
IntMatrix parse_int_matrix(std::string_view text);
SymplecticMatrix parse_symplectic(std::string_view text);
std::string format_literal(const IntMatrix& m);

bool in_principal_congruence(const SymplecticMatrix& m, const CongruenceLevel& level);

enum class ParabolicClass { Siegel, Klingen1, Klingen2, None };
std::string to_string(ParabolicClass c);

// First matching tag in the order Siegel, Klingen1, Klingen2 (g = 2 only).
ParabolicClass classify_parabolic(const SymplecticMatrix& m);
bool in_siegel_parabolic(const SymplecticMatrix& m);
bool in_klingen1(const SymplecticMatrix& m);
bool in_klingen2(const SymplecticMatrix& m);
// det(D) on the Siegel parabolic.
BigInt epsilon(const SymplecticMatrix& m);

// Named families.
SymplecticMatrix translation(const IntMatrix& s);        // (E, S; 0, E)
SymplecticMatrix lower_translation(const IntMatrix& s);  // (E, 0; S, E)
SymplecticMatrix involution_I(int genus);                // (0, -E; E, 0)
SymplecticMatrix swap_P();                               // coordinate swap in genus 2
SymplecticMatrix iota1(const SymplecticMatrix& m);
SymplecticMatrix iota2(const SymplecticMatrix& m);
SymplecticMatrix iota3(const SymplecticMatrix& m);
// (U, 0; 0, U'^{-1}) for U in GL(g, Z).
SymplecticMatrix siegel_levi(const IntMatrix& u);
// (U', U'S; 0, U^{-1}) for U in GL(g, Z), S symmetric.
SymplecticMatrix siegel_parabolic(const IntMatrix& u, const IntMatrix& s);

enum class Triangle { Upper, Lower };
// Genus-1 elementary matrix (1, qx; 0, 1) or (1, 0; qx, 1).
SymplecticMatrix bms_R_generator(long q, long x, Triangle which);

// Genus-1 convenience: (a, b; c, d).
SymplecticMatrix sl2(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d);

}  // namespace siegelmult
