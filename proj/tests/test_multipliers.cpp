#include <doctest.h>

#include <numeric>

#include "siegelmult/errors.hpp"
#include "siegelmult/multipliers.hpp"
#include "siegelmult/random_families.hpp"

using namespace siegelmult;

namespace {

SiegelPoint point(Complex z) {
  CMatrix m(1, 1);
  m(0, 0) = z;
  return SiegelPoint::make(m);
}

SiegelPoint genus2_point() {
  CMatrix z(2, 2);
  z << Complex(0.3, 1.2), Complex(0.2, 0.1), Complex(0.2, 0.1), Complex(-0.4, 0.9);
  return SiegelPoint::make(z);
}

// Dedekind sum s(d, c), c > 0, exact rational as a double.
double dedekind_sum(long d, long c) {
  auto saw = [](double x) {
    const double f = x - std::floor(x);
    return f == 0.0 ? 0.0 : f - 0.5;
  };
  double s = 0.0;
  for (long k = 1; k < c; ++k) s += saw(static_cast<double>(k) / c) * saw(static_cast<double>(k * d) / c);
  return s;
}

}  // namespace

// Values from a 40-digit brute-force lattice sum.
TEST_CASE("theta values against an independent lattice sum") {
  CHECK(std::abs(theta_value(point({0, 1})) - 1.0864348112133080146) < 1e-14);
  CHECK(std::abs(theta_value(point({0, 1}), ThetaConvention::Doubled) - 1.0037348854877390910) < 1e-14);
  CHECK(std::abs(theta_value(SiegelPoint::scaled_i(2), ThetaConvention::Doubled) -
                 1.0037348854877390910 * 1.0037348854877390910) < 1e-14);
  CHECK(std::abs(theta_value(genus2_point()) - Complex(1.0645319628837863464, -0.079149127941374749119)) < 1e-14);
  CHECK(std::abs(theta_value(genus2_point(), ThetaConvention::Doubled) -
                 Complex(0.99399428871300016848, -0.0031030480531413480199)) < 1e-14);
}

TEST_CASE("theta truncation") {
  SeriesTruncation t{12};
  theta_value(point({0, 1}), t);
  CHECK(t.tail_bound < kSeriesTolerance);
  SeriesTruncation small{1};
  CHECK_THROWS_AS(theta_value(point({0, 0.05}), small), TruncationError);
  CHECK(theta_box_tail(point({0, 1}), 3, ThetaConvention::Standard) < 1e-11);
  CHECK(theta_radius_for(point({0, 0.01}), ThetaConvention::Standard) > 20);
  CHECK_THROWS_AS(theta_value(point({0, 1}), small = SeriesTruncation{-1}), PreconditionError);
}

TEST_CASE("theta periodicity and even translations") {
  const Complex a = theta_value(point({0.3, 0.7}));
  CHECK(std::abs(theta_value(point({2.3, 0.7})) - a) < 1e-13);
  CHECK(std::abs(theta_value(point({1.3, 0.7}), ThetaConvention::Doubled) -
                 theta_value(point({0.3, 0.7}), ThetaConvention::Doubled)) < 1e-13);
}

TEST_CASE("theta group membership") {
  CHECK(is_theta_group(sl2(0, -1, 1, 0)));
  CHECK(is_theta_group(sl2(1, 2, 0, 1)));
  CHECK_FALSE(is_theta_group(sl2(1, 1, 0, 1)));
  CHECK(is_theta_group(involution_I(2)));
  CHECK_FALSE(is_theta_group(iota1(sl2(1, 1, 0, 1))));
}

TEST_CASE("theta multiplier, standard exponent") {
  // theta(-1/z) = sqrt(z/i) theta(z), so v(I) = e^{-pi i/4}.
  const auto v = theta_multiplier(sl2(0, -1, 1, 0));
  CHECK(std::abs(v.value - std::polar(1.0, -kPi / 4)) < 1e-12);
  const auto v2 = theta_multiplier(involution_I(2));
  CHECK(std::abs(v2.value - Complex(0.0, -1.0)) < 1e-12);
  const auto t = theta_multiplier(sl2(1, 2, 0, 1));
  CHECK(std::abs(t.value - 1.0) < 1e-12);
  CHECK_THROWS_AS(theta_multiplier(sl2(1, 1, 0, 1)), PreconditionError);
}

TEST_CASE("doubled exponent is not a weight-1/2 multiplier on I") {
  const auto ev = evaluate_theta_multiplier(sl2(0, -1, 1, 0), theta_samples(sl2(0, -1, 1, 0)), ThetaConvention::Doubled);
  CHECK(ev.deviation > 1e-3);
  CHECK_THROWS_AS(theta_multiplier(sl2(0, -1, 1, 0), ThetaConvention::Doubled), MultiplierError);
}

TEST_CASE("theta multiplier near a zero of theta") {
  // geodesic samples of this matrix sit where |theta| ~ 1e-12
  const auto m = parse_symplectic("25,0,-24,0;0,1,0,0;24,0,-23,0;0,0,0,1");
  const auto ev = theta_multiplier(m);
  CHECK(ev.deviation < 1e-12);
}

// log Delta(0.1 + 0.8i) and Delta(i) from 40-digit references.
TEST_CASE("delta log") {
  CHECK(std::abs(delta_log(point({0.1, 0.8})) - Complex(-5.1544235340780078627, 0.53427492316836178737)) < 1e-13);
  CHECK(std::exp(delta_log(point({0, 1}))).real() == doctest::Approx(0.0017853698506421519043).epsilon(1e-13));
  CHECK(delta_tail(point({0, 1}), 10) < 1e-20);
  CHECK_THROWS_AS(delta_log(point({0, 0.01}), 5), TruncationError);
}

TEST_CASE("rademacher values") {
  CHECK(rademacher_integer(sl2(1, 1, 0, 1)) == 1);
  CHECK(rademacher_integer(sl2(0, -1, 1, 0)) == -3);
  CHECK(rademacher_integer(parse_symplectic("13,8;8,5")) == 0);
  // J = -1, L = pi
  CHECK(rademacher_integer(sl2(-1, 0, 0, -1)) == -6);
}

// For c > 0, d(M) = Phi(M) - 3 with Rademacher's Phi(M) = (a + d)/c - 12 s(d, c).
TEST_CASE("rademacher against Dedekind sums") {
  Rng rng(11);
  int checked = 0;
  while (checked < 200) {
    const auto m = random_sl2(rng, 30);
    const long a = m(0, 0).get_si(), c = m(1, 0).get_si(), d = m(1, 1).get_si();
    if (c <= 0) continue;
    const double phi = static_cast<double>(a + d) / c - 12.0 * dedekind_sum(d, c);
    REQUIRE(std::abs(phi - std::round(phi)) < 1e-9);
    CHECK(rademacher_integer(m) == std::lround(phi) - 3);
    ++checked;
  }
}

TEST_CASE("delta multiplier") {
  const auto v = delta_multiplier(1.0, sl2(1, 1, 0, 1));
  CHECK(std::abs(v.value - std::polar(1.0, 2 * kPi / 12)) < 1e-12);
  const auto w = delta_multiplier(12.0, sl2(0, -1, 1, 0));
  CHECK(std::abs(w.value - 1.0) < 1e-12);
}

TEST_CASE("multiplier relation reports per pair") {
  const MultiplierEvaluator ev = [](const SymplecticMatrix& m) { return delta_multiplier(0.5, m); };
  const auto rep = verify_multiplier_relation(ev, 0.5, {{sl2(-1, 0, 0, -1), sl2(-1, 0, 0, -1)}});
  CHECK(rep.holds);
  REQUIRE(rep.records.size() == 1);
  CHECK(rep.records[0].w == 1);
  // a constant evaluator ignores sigma and must fail where w(M, N) r is not integral
  const MultiplierEvaluator one = [](const SymplecticMatrix&) {
    MultiplierEvaluation e;
    e.value = 1.0;
    return e;
  };
  CHECK_FALSE(verify_multiplier_relation(one, 0.5, {{sl2(-1, 0, 0, -1), sl2(-1, 0, 0, -1)}}).holds);
}

TEST_CASE("classical theta multiplier against the lattice sums") {
  Rng rng(31);
  int checked = 0;
  while (checked < 300) {
    const auto m = random_sl2(rng, 40);
    if (!is_theta_group(m)) continue;
    const auto numeric = theta_multiplier(m, theta_samples(m));
    const auto closed = theta_multiplier_classical(m);
    CHECK(std::abs(numeric.value - closed.value) < 1e-9);
    if (checked % 10 == 0) {
      CHECK(std::abs(theta_multiplier(iota1(m), theta_samples(iota1(m))).value - closed.value) < 1e-9);
      CHECK(std::abs(theta_multiplier_classical(iota2(m)).value - closed.value) < 1e-12);
    }
    ++checked;
  }
  CHECK(std::abs(theta_multiplier_classical(sl2(-1, 0, 0, -1)).value - Complex(0.0, -1.0)) < 1e-15);
  CHECK_THROWS_AS(theta_multiplier_classical(involution_I(2)), PreconditionError);
  CHECK_THROWS_AS(theta_multiplier_classical(sl2(1, 1, 0, 1)), PreconditionError);
}

TEST_CASE("large blocks switch to the classical form") {
  const auto m = parse_symplectic("13405,0,-36,0;0,1,0,0;4096,0,-11,0;0,0,0,1");
  const auto direct = theta_multiplier(m, theta_samples(m));
  CHECK(direct.deviation < 1e-12);
  const auto auto_ = theta_multiplier(m);
  CHECK(auto_.sample_values.empty());
  CHECK(std::abs(auto_.value - direct.value) < 1e-9);
}
