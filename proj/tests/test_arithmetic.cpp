#include <doctest.h>

#include "siegelmult/arithmetic.hpp"
#include "siegelmult/errors.hpp"

using namespace siegelmult;

TEST_CASE("kronecker examples") {
  CHECK(kronecker(8, 5) == -1);
  CHECK(kronecker(144, 89) == 1);
  CHECK(kronecker(-3, -1) == -1);
  CHECK(kronecker(3, -1) == 1);
  CHECK(kronecker(12345, 1) == 1);
  CHECK(kronecker(6, 9) == 0);
  // even and negative denominators, standard extension
  CHECK(kronecker(5, 2) == -1);
  CHECK(kronecker(7, 2) == 1);
  CHECK(kronecker(3, 2) == -1);
  CHECK(kronecker(2, 2) == 0);
  CHECK(kronecker(-1, 0) == 1);
  CHECK(kronecker(2, 0) == 0);
  CHECK(kronecker(5, -21) == 1);
  CHECK(kronecker(-5, -21) == -1);
  CHECK_THROWS_AS(kronecker(0, 0), PreconditionError);
}

TEST_CASE("kronecker on big integers") {
  const BigInt p("1000000000000000000000000000057");
  CHECK(kronecker(4, p) == 1);
  CHECK(kronecker(p * p, 7) == 1);
}

TEST_CASE("legendre oracle") {
  CHECK(legendre_oracle(4, 5) == 1);
  CHECK(legendre_oracle(2, 5) == -1);
  CHECK(legendre_oracle(10, 5) == 0);
  CHECK(legendre_oracle(-1, 7) == -1);
  CHECK_THROWS_AS(legendre_oracle(3, 9), PreconditionError);
  CHECK_THROWS_AS(legendre_oracle(3, 2), PreconditionError);
}

TEST_CASE("kronecker agrees with the oracle on small primes") {
  for (long p = 3; p <= 200; p += 2) {
    if (!is_prime(p)) continue;
    for (long c = -200; c <= 200; ++c) {
      if (c == 0) continue;
      REQUIRE(kronecker(c, p) == legendre_oracle(c, p));
    }
  }
}

TEST_CASE("square roots and prime search") {
  CHECK(*sqrt_mod(6, 5) == 1);
  CHECK(*sqrt_mod(10, 5) == 0);
  CHECK_FALSE(sqrt_mod(2, 5).has_value());
  for (long p : {13L, 17L, 97L, 101L, 193L}) {
    for (long c = 1; c < p; ++c) {
      const auto r = sqrt_mod(c, p);
      CHECK(r.has_value() == (legendre_oracle(c, p) == 1));
      if (r) CHECK(mod_floor(*r * *r - c, p) == 0);
    }
  }
  CHECK(find_prime_in_ap(1, 4, 100) == 5);
  CHECK(find_prime_in_ap(1, 8, 100) == 17);
  CHECK_THROWS_AS(find_prime_in_ap(1, 1000, 1000), SearchExhaustedError);
  CHECK_THROWS_AS(find_prime_in_ap(2, 4, 100), PreconditionError);
}

TEST_CASE("egcd and modular helpers") {
  const auto e = egcd(5, 8);
  CHECK(e.g == 1);
  CHECK(5 * e.x + 8 * e.y == 1);
  CHECK(mod_floor(-3, 4) == 1);
  CHECK(mod_inverse(5, 8) == 5);
  CHECK_THROWS_AS(mod_inverse(4, 8), PreconditionError);
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
}
