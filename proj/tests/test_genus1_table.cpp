#include <doctest.h>

#include "siegelmult/errors.hpp"
#include "siegelmult/genus1_table.hpp"

using namespace siegelmult;

TEST_CASE("table examples") {
  CHECK(w_exact_genus1(sl2(1, 0, 1, 1), sl2(1, 0, 1, 1)) == 0);
  CHECK(w_exact_genus1(sl2(1, 0, 1, 1), sl2(-2, -3, 1, 1)) == 1);
  CHECK(w_exact_genus1(sl2(0, -1, 1, 0), sl2(0, -1, 1, 0)) == 0);
  CHECK(w_exact_genus1(sl2(-1, 0, 0, -1), sl2(-1, 0, 0, -1)) == 1);
  CHECK(w_exact_genus1(parse_symplectic("13,8;8,5"), parse_symplectic("13,8;8,5")) == 0);
}

TEST_CASE("real matrices go through the same table") {
  const auto m = RealSymplecticMatrix::make(1, {1.0, 0.0, 1.0, 1.0});
  const auto s = RealSymplecticMatrix::make(1, {-2.0, -3.0, 1.0, 1.0});
  CHECK(w_exact_genus1(m, s) == 1);
  for (const auto& [x, y] : {std::pair{RealSymplecticMatrix::make(1, {2.0, 0.5, -0.5, 0.375}),
                                       RealSymplecticMatrix::make(1, {-0.5, -1.5, 1.0, 1.0})},
                             std::pair{RealSymplecticMatrix::make(1, {0.25, -1.0, 1.0, 0.0}),
                                       RealSymplecticMatrix::make(1, {1.5, 0.5, -1.0, 0.333333333333333333})}}) {
    CHECK(w_exact_genus1(x, y) == -w_cocycle(x, y).w);
  }
}

TEST_CASE("case classification") {
  CHECK(classify_case(second_row_data(sl2(1, 0, 1, 1), sl2(1, 0, 1, 1))) == Genus1Case::Generic);
  CHECK(classify_case(second_row_data(sl2(0, -1, 1, 0), sl2(0, -1, 1, 0))) == Genus1Case::RowZero);
  CHECK(classify_case(second_row_data(sl2(1, 1, 0, 1), sl2(0, -1, 1, 0))) == Genus1Case::LeftZero);
  CHECK(classify_case(second_row_data(sl2(0, -1, 1, 0), sl2(1, 1, 0, 1))) == Genus1Case::LowerZero);
  CHECK(classify_case(second_row_data(sl2(-1, 0, 0, -1), sl2(-1, 0, 0, -1))) == Genus1Case::AllZero);
  CHECK(to_string(Genus1Case::AllZero) == "c=m1=m1p=0");
  const auto r = second_row_data(parse_symplectic("13,8;8,5"), parse_symplectic("13,8;8,5"));
  CHECK(r.m1p == 144);
  CHECK(r.m2p == 89);
}

TEST_CASE("corollary") {
  CHECK(corollary_zero(parse_symplectic("13,8;8,5"), parse_symplectic("13,8;8,5")));
  CHECK_FALSE(corollary_zero(sl2(1, 0, 1, 1), sl2(-2, -3, 1, 1)));
  CHECK_FALSE(corollary_zero(sl2(1, 0, 1, 1), sl2(1, 5, 0, 1)));
}

TEST_CASE("translation rules") {
  for (const auto& m : {sl2(0, -1, 1, 0), sl2(-1, 0, 0, -1), sl2(1, 0, 0, 1), sl2(5, 2, -3, -1)}) {
    for (long x : {0L, 1L, 5L, -7L}) {
      const auto r = w_translation_rules(m, x);
      CHECK(r.right == 0);
      CHECK(r.left == 0);
    }
  }
}

TEST_CASE("table against the continuation oracle") {
  const auto c = compare_table_with_oracle(sl2(-1, 0, 0, -1), sl2(-1, 0, 0, -1));
  CHECK(c.table_case == Genus1Case::AllZero);
  CHECK(c.table == 1);
  CHECK(c.oracle_definition == -1);
  CHECK(c.agrees_automorphy);
  CHECK_FALSE(c.agrees_definition);
  CHECK(genus1_cocycle(sl2(-1, 0, 0, -1), sl2(-1, 0, 0, -1)) == 1);
  CHECK(genus1_cocycle(sl2(-1, 0, 0, -1), sl2(-1, 0, 0, -1), CocycleConvention::Definition) == -1);
}

TEST_CASE("genus guard") {
  CHECK_THROWS_AS(w_exact_genus1(SymplecticMatrix::identity(2), SymplecticMatrix::identity(2)), PreconditionError);
}
