#pragma once

#include <optional>

#include "siegelmult/int_matrix.hpp"

namespace siegelmult {

// Complete Kronecker symbol (c/d). Throws PreconditionError for (0, 0).
int kronecker(const BigInt& c, const BigInt& d);

// c^((p-1)/2) mod p mapped to {-1, 0, 1}. Throws PreconditionError unless p is an odd prime.
int legendre_oracle(const BigInt& c, const BigInt& p);

// Trial division.
bool is_prime(const BigInt& n);

// Least x in [0, p) with x^2 = c mod p, or nothing when c is a non-residue.
std::optional<BigInt> sqrt_mod(const BigInt& c, const BigInt& p);

// Least prime p = a mod m with p < bound. Requires gcd(a, m) = 1 and m >= 1.
// Throws SearchExhaustedError when no prime lies below the bound.
BigInt find_prime_in_ap(const BigInt& a, const BigInt& m, const BigInt& bound);

struct Egcd {
  BigInt g, x, y;  // g = a x + b y, g >= 0
};
Egcd egcd(const BigInt& a, const BigInt& b);

// Non-negative residue.
BigInt mod_floor(const BigInt& a, const BigInt& m);
// Inverse of a modulo m; throws PreconditionError when gcd(a, m) != 1.
BigInt mod_inverse(const BigInt& a, const BigInt& m);

}  // namespace siegelmult
