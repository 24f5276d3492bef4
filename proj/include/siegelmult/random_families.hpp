#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "siegelmult/genus1_table.hpp"

namespace siegelmult {

// Seeded source for every sampler below. Same seed, same call sequence, same instances.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  long uniform(long lo, long hi);  // inclusive
  bool coin() { return uniform(0, 1) == 1; }
  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

// Uniform coprime second row (c, d) with |c|, |d| <= bound, completed with the smallest |a|;
// retried until every entry is within bound.
SymplecticMatrix random_sl2(Rng& rng, long bound);

// Symmetric g x g matrix with entries uniform in [-bound, bound].
IntMatrix random_symmetric(Rng& rng, int g, long bound);

// GL(2, Z) word in the elementary matrices and diag(+-1, +-1), length <= 4.
IntMatrix random_gl2(Rng& rng, bool det_one);

// Word of length 1..6 in translations, lower translations, I, iota_nu(random SL2), P and
// Siegel-Levi elements; rejected and redrawn while any entry exceeds max_entry.
SymplecticMatrix random_sp4(Rng& rng, long max_entry = 50);

// Genus-1 pair in the requested table case; Generic pairs have m1 c m1' != 0.
std::pair<SymplecticMatrix, SymplecticMatrix> random_genus1_pair(Rng& rng, Genus1Case which, long bound);

// Siegel parabolic (U', U'S; 0, U^{-1}); positive_epsilon forces det U = 1.
SymplecticMatrix random_siegel_parabolic(Rng& rng, bool positive_epsilon);

// Word in the first (which = Klingen1) or second Klingen parabolic group.
SymplecticMatrix random_klingen(Rng& rng, ParabolicClass which, long max_entry = 50);

// Word of length <= 6 in iota1(T), iota1(I), iota3(U), even-diagonal translations and inverses,
// kept only if it lies in the theta group and within max_entry.
SymplecticMatrix random_theta_word(Rng& rng, long max_entry = 12);

struct BmsParameters {
  BigInt a, b1, c1, d1, b2, c2, d2;
  BigInt y() const { return d1 - b1 * c1 * d2 + c1 * c2 * b1 * b2 * d1; }
};
// Throws PreconditionError unless a d1 - b1 c1 = 1 and a d2 - b2 c2 = 1.
void validate(const BmsParameters& p);
// a, c1, c2 nonzero and uniform in [-bound, bound] with gcd(a, c_i) = 1; d_i = a^{-1} mod |c_i|.
BmsParameters random_bms(Rng& rng, long bound);
// Completion with the given a, c1, c2 (d_i the least positive inverse of a mod |c_i|).
BmsParameters bms_parameters(const BigInt& a, const BigInt& c1, const BigInt& c2);

// (a, b; c, d) in Gamma_1[q] with the given second row; a = d^{-1} mod |c q|.
SymplecticMatrix complete_second_row(const BigInt& c, const BigInt& d, long q);
// (a, b; c, d) in Gamma_1[q] with the given first row; d = a^{-1} mod |b q|.
SymplecticMatrix complete_first_row(const BigInt& a, const BigInt& b, long q);

}  // namespace siegelmult
