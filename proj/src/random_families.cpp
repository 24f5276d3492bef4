#include "siegelmult/random_families.hpp"

#include "siegelmult/arithmetic.hpp"
#include "siegelmult/errors.hpp"
#include "siegelmult/multipliers.hpp"

namespace siegelmult {

long Rng::uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

namespace {

bool within(const SymplecticMatrix& m, long bound) { return m.max_abs() <= bound; }

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Nearest integer to p / q, q != 0.
BigInt round_div(const BigInt& p, const BigInt& q) {
  BigInt two_p = 2 * p + q, two_q = 2 * q, r;
  mpz_fdiv_q(r.get_mpz_t(), two_p.get_mpz_t(), two_q.get_mpz_t());
  return r;
}

SymplecticMatrix t1() { return sl2(1, 1, 0, 1); }
SymplecticMatrix i1() { return sl2(0, -1, 1, 0); }

}  // namespace

SymplecticMatrix random_sl2(Rng& rng, long bound) {
  if (bound < 1) throw PreconditionError("random_sl2: bound must be positive");
  for (;;) {
    const BigInt c = rng.uniform(-bound, bound), d = rng.uniform(-bound, bound);
    if (gcd(c, d) != 1) continue;
    // a d - b c = 1
    Egcd e = egcd(d, c);  // e.x d + e.y c = 1
    BigInt a = e.x, b = -e.y;
    if (c != 0) {
      const BigInt k = round_div(a, c);
      a -= k * c;
      b -= k * d;
    } else {
      // d = +-1, b free
      a = d;
      b = rng.uniform(-bound, bound);
    }
    const SymplecticMatrix m = sl2(a, b, c, d);
    if (within(m, bound)) return m;
  }
}

IntMatrix random_symmetric(Rng& rng, int g, long bound) {
  IntMatrix s(g, g);
  for (int i = 0; i < g; ++i)
    for (int j = i; j < g; ++j) {
      s(i, j) = rng.uniform(-bound, bound);
      s(j, i) = s(i, j);
    }
  return s;
}

IntMatrix random_gl2(Rng& rng, bool det_one) {
  IntMatrix u = IntMatrix::identity(2);
  const int len = static_cast<int>(rng.uniform(0, 4));
  for (int k = 0; k < len; ++k) {
    const long x = rng.uniform(-2, 2);
    IntMatrix e = IntMatrix::identity(2);
    if (rng.coin())
      e(0, 1) = x;
    else
      e(1, 0) = x;
    u = u * e;
  }
  if (!det_one) {
    IntMatrix s = IntMatrix::identity(2);
    s(0, 0) = rng.coin() ? 1 : -1;
    s(1, 1) = rng.coin() ? 1 : -1;
    u = u * s;
  } else if (rng.coin()) {
    u = -u;
  }
  return u;
}

SymplecticMatrix random_sp4(Rng& rng, long max_entry) {
  for (;;) {
    SymplecticMatrix m = SymplecticMatrix::identity(2);
    const int len = static_cast<int>(rng.uniform(1, 6));
    for (int k = 0; k < len; ++k) {
      SymplecticMatrix f = SymplecticMatrix::identity(2);
      switch (rng.uniform(0, 7)) {
        case 0: f = translation(random_symmetric(rng, 2, 2)); break;
        case 1: f = lower_translation(random_symmetric(rng, 2, 2)); break;
        case 2: f = involution_I(2); break;
        case 3: f = iota1(random_sl2(rng, 4)); break;
        case 4: f = iota2(random_sl2(rng, 4)); break;
        case 5: f = iota3(random_sl2(rng, 4)); break;
        case 6: f = swap_P(); break;
        default: f = siegel_levi(random_gl2(rng, false)); break;
      }
      m = m * f;
    }
    if (within(m, max_entry)) return m;
  }
}

std::pair<SymplecticMatrix, SymplecticMatrix> random_genus1_pair(Rng& rng, Genus1Case which, long bound) {
  auto unipotent = [&] {
    const BigInt x = rng.uniform(-bound, bound);
    const SymplecticMatrix t = sl2(1, x, 0, 1);
    return rng.coin() ? t : negate(t);
  };
  auto with_lower_left = [&] {
    for (;;) {
      SymplecticMatrix m = random_sl2(rng, bound);
      if (m(1, 0) != 0) return m;
    }
  };
  for (;;) {
    switch (which) {
      case Genus1Case::Generic: {
        SymplecticMatrix m = random_sl2(rng, bound), s = random_sl2(rng, bound);
        if (classify_case(second_row_data(m, s)) == Genus1Case::Generic) return {m, s};
        break;
      }
      case Genus1Case::RowZero: {
        const SymplecticMatrix m = with_lower_left();
        return {m, inverse(m) * unipotent()};
      }
      case Genus1Case::LeftZero: return {unipotent(), with_lower_left()};
      case Genus1Case::LowerZero: return {with_lower_left(), unipotent()};
      case Genus1Case::AllZero: return {unipotent(), unipotent()};
    }
  }
}

SymplecticMatrix random_siegel_parabolic(Rng& rng, bool positive_epsilon) {
  IntMatrix u = random_gl2(rng, positive_epsilon);
  return siegel_parabolic(u, random_symmetric(rng, 2, 3));
}

SymplecticMatrix random_klingen(Rng& rng, ParabolicClass which, long max_entry) {
  if (which != ParabolicClass::Klingen1 && which != ParabolicClass::Klingen2)
    throw PreconditionError("random_klingen: Klingen1 or Klingen2 required");
  const bool first = which == ParabolicClass::Klingen1;
  for (;;) {
    SymplecticMatrix m = SymplecticMatrix::identity(2);
    const int len = static_cast<int>(rng.uniform(1, 5));
    for (int k = 0; k < len; ++k) {
      SymplecticMatrix f = SymplecticMatrix::identity(2);
      switch (rng.uniform(0, 3)) {
        case 0: f = first ? iota1(random_sl2(rng, 5)) : iota2(random_sl2(rng, 5)); break;
        case 1: f = translation(random_symmetric(rng, 2, 3)); break;
        case 2: {
          IntMatrix u = IntMatrix::identity(2);
          u(0, 0) = rng.coin() ? 1 : -1;
          u(1, 1) = rng.coin() ? 1 : -1;
          if (first)
            u(1, 0) = rng.uniform(-3, 3);
          else
            u(0, 1) = rng.uniform(-3, 3);
          f = siegel_levi(u);
          break;
        }
        default: f = negate(SymplecticMatrix::identity(2)); break;
      }
      m = m * f;
    }
    if (within(m, max_entry)) return m;
  }
}

SymplecticMatrix random_theta_word(Rng& rng, long max_entry) {
  for (;;) {
    SymplecticMatrix m = SymplecticMatrix::identity(2);
    const int len = static_cast<int>(rng.uniform(1, 6));
    for (int k = 0; k < len; ++k) {
      SymplecticMatrix f = SymplecticMatrix::identity(2);
      switch (rng.uniform(0, 3)) {
        case 0: f = iota1(t1()); break;
        case 1: f = iota1(i1()); break;
        case 2: f = iota3(random_sl2(rng, 2)); break;
        default: {
          IntMatrix s = random_symmetric(rng, 2, 2);
          s(0, 0) = 2 * rng.uniform(-1, 1);
          s(1, 1) = 2 * rng.uniform(-1, 1);
          f = translation(s);
          break;
        }
      }
      if (rng.coin()) f = inverse(f);
      m = m * f;
    }
    if (within(m, max_entry) && is_theta_group(m)) return m;
  }
}

void validate(const BmsParameters& p) {
  if (p.a * p.d1 - p.b1 * p.c1 != 1) throw PreconditionError("bms: a d1 - b1 c1 != 1");
  if (p.a * p.d2 - p.b2 * p.c2 != 1) throw PreconditionError("bms: a d2 - b2 c2 != 1");
}

BmsParameters bms_parameters(const BigInt& a, const BigInt& c1, const BigInt& c2) {
  BmsParameters p;
  p.a = a;
  p.c1 = c1;
  p.c2 = c2;
  auto complete = [&](const BigInt& c, BigInt& b, BigInt& d) {
    if (c == 0) {
      if (a != 1 && a != -1) throw PreconditionError("bms: c = 0 needs a = +-1");
      d = a;
      b = 0;
      return;
    }
    const BigInt m = abs(c);
    d = m == 1 ? BigInt(1) : mod_inverse(a, m);
    b = (a * d - 1) / c;
  };
  complete(c1, p.b1, p.d1);
  complete(c2, p.b2, p.d2);
  validate(p);
  return p;
}

BmsParameters random_bms(Rng& rng, long bound) {
  for (;;) {
    const BigInt a = rng.uniform(-bound, bound), c1 = rng.uniform(-bound, bound), c2 = rng.uniform(-bound, bound);
    if (a == 0 || c1 == 0 || c2 == 0) continue;
    if (gcd(a, c1) != 1 || gcd(a, c2) != 1) continue;
    return bms_parameters(a, c1, c2);
  }
}

SymplecticMatrix complete_second_row(const BigInt& c, const BigInt& d, long q) {
  if (c == 0) {
    if (d != 1) throw PreconditionError("complete_second_row: c = 0 needs d = 1");
    return SymplecticMatrix::identity(1);
  }
  const BigInt m = abs(c) * q;
  const BigInt a = m == 1 ? BigInt(1) : mod_inverse(d, m);
  return sl2(a, (a * d - 1) / c, c, d);
}

SymplecticMatrix complete_first_row(const BigInt& a, const BigInt& b, long q) {
  if (b == 0) {
    if (a != 1) throw PreconditionError("complete_first_row: b = 0 needs a = 1");
    return SymplecticMatrix::identity(1);
  }
  const BigInt m = abs(b) * q;
  const BigInt d = m == 1 ? BigInt(1) : mod_inverse(a, m);
  return sl2(a, b, (a * d - 1) / b, d);
}

}  // namespace siegelmult
