#include "siegelmult/arithmetic.hpp"

#include "siegelmult/errors.hpp"

namespace siegelmult {

namespace {

// Jacobi symbol for odd positive n by binary reciprocity.
int jacobi(BigInt a, BigInt n) {
  a = mod_floor(a, n);
  int t = 1;
  while (a != 0) {
    while (mpz_even_p(a.get_mpz_t())) {
      a /= 2;
      const unsigned long r = mpz_fdiv_ui(n.get_mpz_t(), 8);
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(a, n);
    if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(n.get_mpz_t(), 4) == 3) t = -t;
    a = mod_floor(a, n);
  }
  return n == 1 ? t : 0;
}

}  // namespace

BigInt mod_floor(const BigInt& a, const BigInt& m) {
  if (m <= 0) throw PreconditionError("mod_floor: modulus must be positive");
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

int kronecker(const BigInt& c, const BigInt& d) {
  if (c == 0 && d == 0) throw PreconditionError("kronecker: (0, 0) is undefined");
  if (d == 0) return (c == 1 || c == -1) ? 1 : 0;
  int result = 1;
  BigInt n = d;
  if (n < 0) {
    n = -n;
    if (c < 0) result = -result;
  }
  // (c/2) = 0 for even c, +1 for c = +-1 mod 8, -1 for c = +-3 mod 8
  const bool c_even = mpz_even_p(c.get_mpz_t()) != 0;
  while (mpz_even_p(n.get_mpz_t())) {
    if (c_even) return 0;
    n /= 2;
    const unsigned long r = mpz_fdiv_ui(c.get_mpz_t(), 8);
    if (r == 3 || r == 5) result = -result;
  }
  if (n == 1) return result;
  return result * jacobi(c, n);
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (mpz_even_p(n.get_mpz_t())) return false;
  for (BigInt k = 3; k * k <= n; k += 2) {
    if (mpz_divisible_p(n.get_mpz_t(), k.get_mpz_t())) return false;
  }
  return true;
}

int legendre_oracle(const BigInt& c, const BigInt& p) {
  if (p == 2 || !is_prime(p)) throw PreconditionError("legendre_oracle: p must be an odd prime");
  BigInt e = (p - 1) / 2, r;
  const BigInt base = mod_floor(c, p);
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

std::optional<BigInt> sqrt_mod(const BigInt& c, const BigInt& p) {
  const int symbol = legendre_oracle(c, p);
  const BigInt a = mod_floor(c, p);
  if (symbol == 0) return BigInt(0);
  if (symbol < 0) return std::nullopt;
  // Tonelli-Shanks
  BigInt q = p - 1;
  unsigned long s = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q /= 2;
    ++s;
  }
  BigInt z = 2;
  while (legendre_oracle(z, p) != -1) ++z;
  BigInt m_c, t, r, e;
  mpz_powm(m_c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  e = (q + 1) / 2;
  mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  unsigned long m = s;
  while (t != 1) {
    unsigned long i = 0;
    BigInt tt = t;
    while (tt != 1) {
      tt = tt * tt % p;
      ++i;
    }
    BigInt b = m_c;
    for (unsigned long k = 0; k + 1 < m - i; ++k) b = b * b % p;
    m = i;
    m_c = b * b % p;
    t = t * m_c % p;
    r = r * b % p;
  }
  const BigInt other = p - r;
  return r < other ? r : other;
}

BigInt find_prime_in_ap(const BigInt& a, const BigInt& m, const BigInt& bound) {
  if (m < 1) throw PreconditionError("find_prime_in_ap: modulus must be positive");
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (g != 1) throw PreconditionError("find_prime_in_ap: gcd(a, m) must be 1");
  for (BigInt p = mod_floor(a, m); p < bound; p += m) {
    if (is_prime(p)) return p;
  }
  throw SearchExhaustedError("find_prime_in_ap: no prime = " + a.get_str() + " mod " + m.get_str() + " below " +
                             bound.get_str());
}

Egcd egcd(const BigInt& a, const BigInt& b) {
  Egcd r;
  mpz_gcdext(r.g.get_mpz_t(), r.x.get_mpz_t(), r.y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
  const Egcd e = egcd(a, m);
  if (e.g != 1) throw PreconditionError("mod_inverse: " + a.get_str() + " is not invertible mod " + m.get_str());
  return mod_floor(e.x, m);
}

}  // namespace siegelmult
