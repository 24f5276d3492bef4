#pragma once

#include <string>

#include "siegelmult/cocycle.hpp"

namespace siegelmult {

// The five-case table for 4 w(M, S), M = (*, *; m1, m2), S = (a, b; c, d), (m1', m2') the
// second row of MS. The table's values are in the automorphy sign convention
// (see automorphy_cocycle); they equal minus the defining formula w_cocycle.

enum class Genus1Case {
  Generic,       // m1 c m1' != 0
  RowZero,       // c m1 != 0, m1' = 0
  LeftZero,      // c m1' != 0, m1 = 0
  LowerZero,     // m1 m1' != 0, c = 0
  AllZero,       // c = m1 = m1' = 0
};
std::string to_string(Genus1Case c);

template <typename T>
struct SecondRowData {
  T m1, m2;    // second row of M
  T a, c;      // upper-left and lower-left of S
  T m1p, m2p;  // second row of MS
};

SecondRowData<BigInt> second_row_data(const SymplecticMatrix& m, const SymplecticMatrix& s);
SecondRowData<double> second_row_data(const RealSymplecticMatrix& m, const RealSymplecticMatrix& s);

Genus1Case classify_case(const SecondRowData<BigInt>& r);

// Table value 4w for the case; throws if not divisible by 4 ... (returns the quotient).
long w_exact_genus1(const SymplecticMatrix& m, const SymplecticMatrix& s);
long w_exact_genus1(const RealSymplecticMatrix& m, const RealSymplecticMatrix& s);

// Hypothesis of the table's corollary: m1 c m1' != 0 and (m1 m1' > 0 or m1 c < 0).
bool corollary_zero(const SymplecticMatrix& m, const SymplecticMatrix& s);

struct TranslationRuleValues {
  long right = 0;  // w(M, (1, x; 0, 1))
  long left = 0;   // w((1, x; 0, 1), M)
};
// Both orders evaluated by the table; throws Error if either is non-zero.
TranslationRuleValues w_translation_rules(const SymplecticMatrix& m, const BigInt& x);

// Table value cross-checked against the continuation oracle (automorphy convention);
// throws Error on disagreement. This is the library's exact genus-1 cocycle.
long genus1_cocycle(const SymplecticMatrix& m, const SymplecticMatrix& s,
                    CocycleConvention convention = CocycleConvention::Automorphy);

struct Genus1Comparison {
  Genus1Case table_case;
  long table = 0;
  long oracle_definition = 0;  // w_cocycle
  bool agrees_automorphy = false;  // table == -oracle_definition
  bool agrees_definition = false;  // table == oracle_definition
};
Genus1Comparison compare_table_with_oracle(const SymplecticMatrix& m, const SymplecticMatrix& s);

}  // namespace siegelmult
