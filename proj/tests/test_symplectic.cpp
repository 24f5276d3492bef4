#include <doctest.h>

#include "siegelmult/errors.hpp"
#include "siegelmult/half_space.hpp"
#include "siegelmult/symplectic.hpp"

using namespace siegelmult;

namespace {
SymplecticMatrix m22(long a, long b, long c, long d) { return sl2(a, b, c, d); }
}  // namespace

TEST_CASE("make_symplectic validates exactly") {
  CHECK_NOTHROW(parse_symplectic("0,-1;1,0"));
  CHECK_NOTHROW(parse_symplectic("1,0,0,0;0,1,0,0;0,0,1,0;0,0,0,1"));
  CHECK_THROWS_AS(parse_symplectic("1,2;1,1"), NotSymplecticError);
  CHECK_THROWS_AS(parse_symplectic("1,0,0;0,1,0;0,0,1"), ParseError);
  CHECK_THROWS_AS(parse_symplectic("1,x;0,1"), ParseError);
  try {
    parse_symplectic("2,0;0,1");
    FAIL("accepted a non-symplectic matrix");
  } catch (const NotSymplecticError& e) {
    CHECK(e.row() >= 0);
    CHECK(e.col() >= 0);
  }
}

TEST_CASE("literals round-trip with big entries") {
  const auto m = parse_symplectic("100000000000000000001,100000000000000000000;1,1");
  CHECK(m.literal() == "100000000000000000001,100000000000000000000;1,1");
  CHECK(parse_symplectic(m.literal()) == m);
}

TEST_CASE("products and inverses") {
  const auto t = m22(1, 1, 0, 1), s = m22(0, -1, 1, 0);
  CHECK((s * s) == negate(SymplecticMatrix::identity(1)));
  CHECK(power(s * t, 3) == negate(SymplecticMatrix::identity(1)));
  CHECK((t * inverse(t)) == SymplecticMatrix::identity(1));
  const auto m = parse_symplectic("13,8;8,5");
  CHECK(power(m, 2).literal() == "233,144;144,89");
  CHECK_THROWS_AS(mul(m, SymplecticMatrix::identity(2)), GenusMismatchError);
}

TEST_CASE("action and automorphy factor") {
  const auto z = SiegelPoint::scaled_i(1);
  const auto w = act(m22(0, -1, 1, 0), z);
  CHECK(std::abs(w.z()(0, 0) - Complex(0, 1)) < 1e-15);
  CHECK(std::abs(j_factor(m22(1, 0, 1, 1), z) - Complex(1, 1)) < 1e-15);
  const auto g = j_at_i_exact(parse_symplectic("13,8;8,5"));
  CHECK(g.re == 5);
  CHECK(g.im == 8);
  CHECK_THROWS_AS(act(SymplecticMatrix::identity(2), z), GenusMismatchError);
}

TEST_CASE("Siegel points are validated") {
  CMatrix z(1, 1);
  z(0, 0) = Complex(0.0, -1.0);
  CHECK_THROWS_AS(SiegelPoint::make(z), PreconditionError);
  CMatrix y(2, 2);
  y << Complex(0, 1), Complex(0, 0), Complex(1, 0), Complex(0, 1);
  CHECK_THROWS_AS(SiegelPoint::make(y), PreconditionError);
}

TEST_CASE("congruence subgroups") {
  CHECK(in_principal_congruence(parse_symplectic("13,8;8,5"), CongruenceLevel(4)));
  CHECK_FALSE(in_principal_congruence(parse_symplectic("13,8;8,5"), CongruenceLevel(8)));
  CHECK(in_principal_congruence(parse_symplectic("0,-1;1,0"), CongruenceLevel(1)));
  CHECK_THROWS_AS(CongruenceLevel(0), PreconditionError);
}

TEST_CASE("parabolic classification") {
  CHECK(classify_parabolic(translation(IntMatrix{{1, 2}, {2, 3}})) == ParabolicClass::Siegel);
  CHECK(classify_parabolic(iota1(m22(2, 1, 1, 1))) == ParabolicClass::Klingen1);
  CHECK(classify_parabolic(iota2(m22(2, 1, 1, 1))) == ParabolicClass::Klingen2);
  CHECK_THROWS_AS(epsilon(involution_I(2)), PreconditionError);
  CHECK(classify_parabolic(involution_I(2)) == ParabolicClass::None);
  CHECK(to_string(ParabolicClass::Siegel) == "siegel");
  CHECK(epsilon(siegel_levi(IntMatrix{{0, 1}, {1, 0}})) == -1);
  CHECK(epsilon(translation(IntMatrix{{1, 0}, {0, 1}})) == 1);
}

TEST_CASE("embeddings and named families") {
  const auto m = m22(2, 1, 1, 1);
  CHECK(iota1(m).literal() == "2,0,1,0;0,1,0,0;1,0,1,0;0,0,0,1");
  CHECK(iota2(m).literal() == "1,0,0,0;0,2,0,1;0,0,1,0;0,1,0,1");
  CHECK(iota3(m).literal() == "2,1,0,0;1,1,0,0;0,0,1,-1;0,0,-1,2");
  CHECK(swap_P() * swap_P() == SymplecticMatrix::identity(2));
  CHECK(bms_R_generator(4, 3, Triangle::Upper).literal() == "1,12;0,1");
  CHECK(bms_R_generator(4, 3, Triangle::Lower).literal() == "1,0;12,1");
  CHECK_THROWS_AS(translation(IntMatrix{{1, 2}, {3, 1}}), PreconditionError);
  CHECK_THROWS_AS(iota1(SymplecticMatrix::identity(2)), GenusMismatchError);
}
