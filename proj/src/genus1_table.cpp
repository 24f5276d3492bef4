#include "siegelmult/genus1_table.hpp"

#include <cmath>
#include <sstream>

#include "siegelmult/errors.hpp"

namespace siegelmult {

std::string to_string(Genus1Case c) {
  switch (c) {
    case Genus1Case::Generic: return "generic";
    case Genus1Case::RowZero: return "m1p=0";
    case Genus1Case::LeftZero: return "m1=0";
    case Genus1Case::LowerZero: return "c=0";
    case Genus1Case::AllZero: return "c=m1=m1p=0";
  }
  return "?";
}

namespace {

void require_genus1(int g, const char* who) {
  if (g != 1) throw GenusMismatchError(std::string(who) + ": genus-1 matrices required");
}

int sgn(const BigInt& x) { return sign(x); }
int sgn(double x) {
  constexpr double eps = 1e-12;
  return x > eps ? 1 : (x < -eps ? -1 : 0);
}

template <typename T>
Genus1Case classify(const SecondRowData<T>& r) {
  const int m1 = sgn(r.m1), c = sgn(r.c), m1p = sgn(r.m1p);
  if (m1 != 0 && c != 0 && m1p != 0) return Genus1Case::Generic;
  if (c != 0 && m1 != 0) return Genus1Case::RowZero;
  if (c != 0 && m1p != 0) return Genus1Case::LeftZero;
  if (m1 != 0 && m1p != 0) return Genus1Case::LowerZero;
  if (c == 0 && m1 == 0 && m1p == 0) return Genus1Case::AllZero;
  // c != 0 with m1 = m1p = 0, or c = 0 with exactly one of m1, m1p zero:
  // impossible for determinant-one matrices since m1p = m1 a + m2 c.
  throw Error("genus-1 table: inconsistent second-row data (input is not in SL2)");
}

template <typename T>
long table_value(const SecondRowData<T>& r) {
  const int m1 = sgn(r.m1), m2 = sgn(r.m2), a = sgn(r.a), c = sgn(r.c), m1p = sgn(r.m1p);
  int four_w = 0;
  switch (classify(r)) {
    case Genus1Case::Generic: four_w = c + m1 - m1p - m1 * c * m1p; break;
    case Genus1Case::RowZero: four_w = -(1 - c) * (1 - m1); break;
    case Genus1Case::LeftZero: four_w = (1 + c) * (1 - m2); break;
    case Genus1Case::LowerZero: four_w = (1 - a) * (1 + m1); break;
    case Genus1Case::AllZero: four_w = (1 - a) * (1 - m2); break;
  }
  if (four_w % 4 != 0) {
    std::ostringstream os;
    os << "genus-1 table: case value " << four_w << " is not divisible by 4";
    throw Error(os.str());
  }
  return four_w / 4;
}

}  // namespace

SecondRowData<BigInt> second_row_data(const SymplecticMatrix& m, const SymplecticMatrix& s) {
  require_genus1(m.genus(), "second_row_data");
  require_genus1(s.genus(), "second_row_data");
  const SymplecticMatrix ms = m * s;
  return {m(1, 0), m(1, 1), s(0, 0), s(1, 0), ms(1, 0), ms(1, 1)};
}

SecondRowData<double> second_row_data(const RealSymplecticMatrix& m, const RealSymplecticMatrix& s) {
  require_genus1(m.genus(), "second_row_data");
  require_genus1(s.genus(), "second_row_data");
  const RealSymplecticMatrix ms = mul(m, s);
  return {m(1, 0), m(1, 1), s(0, 0), s(1, 0), ms(1, 0), ms(1, 1)};
}

Genus1Case classify_case(const SecondRowData<BigInt>& r) { return classify(r); }

long w_exact_genus1(const SymplecticMatrix& m, const SymplecticMatrix& s) {
  return table_value(second_row_data(m, s));
}

long w_exact_genus1(const RealSymplecticMatrix& m, const RealSymplecticMatrix& s) {
  return table_value(second_row_data(m, s));
}

bool corollary_zero(const SymplecticMatrix& m, const SymplecticMatrix& s) {
  const auto r = second_row_data(m, s);
  const int m1 = sgn(r.m1), c = sgn(r.c), m1p = sgn(r.m1p);
  if (m1 * c * m1p == 0) return false;
  return m1 * m1p > 0 || m1 * c < 0;
}

TranslationRuleValues w_translation_rules(const SymplecticMatrix& m, const BigInt& x) {
  require_genus1(m.genus(), "w_translation_rules");
  const SymplecticMatrix t = sl2(1, x, 0, 1);
  TranslationRuleValues v;
  v.right = w_exact_genus1(m, t);
  v.left = w_exact_genus1(t, m);
  if (v.right != 0 || v.left != 0) {
    std::ostringstream os;
    os << "w_translation_rules: table gives (" << v.right << ", " << v.left << ") for " << m.literal();
    throw Error(os.str());
  }
  return v;
}

Genus1Comparison compare_table_with_oracle(const SymplecticMatrix& m, const SymplecticMatrix& s) {
  Genus1Comparison cmp;
  cmp.table_case = classify_case(second_row_data(m, s));
  cmp.table = w_exact_genus1(m, s);
  cmp.oracle_definition = w_cocycle(m, s).w;
  cmp.agrees_automorphy = cmp.table == -cmp.oracle_definition;
  cmp.agrees_definition = cmp.table == cmp.oracle_definition;
  return cmp;
}

long genus1_cocycle(const SymplecticMatrix& m, const SymplecticMatrix& s, CocycleConvention convention) {
  const Genus1Comparison cmp = compare_table_with_oracle(m, s);
  if (!cmp.agrees_automorphy) {
    std::ostringstream os;
    os << "genus1_cocycle: table " << cmp.table << " disagrees with oracle (" << to_string(cmp.table_case)
       << ") for M=" << m.literal() << " S=" << s.literal();
    throw Error(os.str());
  }
  return convention == CocycleConvention::Automorphy ? -cmp.oracle_definition : cmp.oracle_definition;
}

}  // namespace siegelmult
