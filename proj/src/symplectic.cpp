#include "siegelmult/symplectic.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include "siegelmult/errors.hpp"

namespace siegelmult {

CongruenceLevel::CongruenceLevel(long q) : q_(q) {
  if (q < 1) throw PreconditionError("congruence level must be >= 1, got " + std::to_string(q));
}

namespace {

IntMatrix standard_alternating(int g) {
  IntMatrix j(2 * g, 2 * g);
  for (int i = 0; i < g; ++i) {
    j(i, g + i) = -1;
    j(g + i, i) = 1;
  }
  return j;
}

IntMatrix assemble(const IntMatrix& a, const IntMatrix& b, const IntMatrix& c, const IntMatrix& d) {
  const int g = a.rows();
  IntMatrix m(2 * g, 2 * g);
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) {
      m(i, j) = a(i, j);
      m(i, g + j) = b(i, j);
      m(g + i, j) = c(i, j);
      m(g + i, g + j) = d(i, j);
    }
  return m;
}

void require_genus(const SymplecticMatrix& m, int g, const char* who) {
  if (m.genus() != g)
    throw GenusMismatchError(std::string(who) + ": expected genus " + std::to_string(g) + ", got " +
                             std::to_string(m.genus()));
}

}  // namespace

SymplecticMatrix SymplecticMatrix::make(const IntMatrix& m) {
  if (!m.square() || m.rows() == 0 || m.rows() % 2 != 0)
    throw PreconditionError("symplectic matrix must be 2g x 2g with g >= 1");
  const int g = m.rows() / 2;
  const IntMatrix j = standard_alternating(g);
  const IntMatrix lhs = m.transpose() * j * m;
  for (int r = 0; r < 2 * g; ++r)
    for (int c = 0; c < 2 * g; ++c)
      if (lhs(r, c) != j(r, c)) {
        const BigInt diff = lhs(r, c) - j(r, c);
        throw NotSymplecticError("not symplectic: (M'IM - I)[" + std::to_string(r) + "," + std::to_string(c) +
                                     "] = " + diff.get_str(),
                                 r, c);
      }
  return SymplecticMatrix(g, m);
}

SymplecticMatrix SymplecticMatrix::make(int genus, std::vector<BigInt> entries) {
  if (genus < 1) throw PreconditionError("genus must be >= 1");
  return make(IntMatrix(2 * genus, 2 * genus, std::move(entries)));
}

SymplecticMatrix SymplecticMatrix::identity(int genus) {
  if (genus < 1) throw PreconditionError("genus must be >= 1");
  return SymplecticMatrix(genus, IntMatrix::identity(2 * genus));
}

std::string SymplecticMatrix::literal() const { return format_literal(m_); }

SymplecticMatrix mul(const SymplecticMatrix& lhs, const SymplecticMatrix& rhs) {
  if (lhs.g_ != rhs.g_)
    throw GenusMismatchError("mul: genus " + std::to_string(lhs.g_) + " vs " + std::to_string(rhs.g_));
  return SymplecticMatrix(lhs.g_, lhs.m_ * rhs.m_);
}

SymplecticMatrix inverse(const SymplecticMatrix& m) {
  // M^{-1} = I^{-1} M' I = (D', -B'; -C', A')
  const int g = m.g_;
  const IntMatrix a = m.a(), b = m.b(), c = m.c(), d = m.d();
  return SymplecticMatrix(g, assemble(d.transpose(), -b.transpose(), -c.transpose(), a.transpose()));
}

SymplecticMatrix negate(const SymplecticMatrix& m) { return SymplecticMatrix(m.g_, -m.m_); }

SymplecticMatrix power(const SymplecticMatrix& m, long exponent) {
  SymplecticMatrix base = exponent < 0 ? inverse(m) : m;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  SymplecticMatrix result = SymplecticMatrix::identity(m.genus());
  while (e > 0) {
    if (e & 1UL) result = result * base;
    base = base * base;
    e >>= 1U;
  }
  return result;
}

RealSymplecticMatrix RealSymplecticMatrix::make(int genus, std::vector<double> entries) {
  if (genus < 1) throw PreconditionError("genus must be >= 1");
  const int n = 2 * genus;
  if (entries.size() != static_cast<std::size_t>(n * n)) throw PreconditionError("entry count does not match genus");
  auto at = [&](int i, int j) { return entries[static_cast<std::size_t>(i * n + j)]; };
  double scale = 1.0;
  for (double v : entries) scale = std::max(scale, std::abs(v));
  // (M'IM)_{rc} = sum_k M_{k r} (IM)_{k c}; (IM)_{k c} = -M_{k+g,c} for k<g, M_{k-g,c} otherwise
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      double acc = 0.0;
      for (int k = 0; k < genus; ++k) acc += -at(k, r) * at(k + genus, c) + at(k + genus, r) * at(k, c);
      double target = 0.0;
      if (r < genus && c == r + genus) target = -1.0;
      if (r >= genus && c == r - genus) target = 1.0;
      if (std::abs(acc - target) > kTolerance * scale * scale) {
        std::ostringstream os;
        os << "not symplectic within tolerance: (M'IM - I)[" << r << "," << c << "] = " << acc - target;
        throw NotSymplecticError(os.str(), r, c);
      }
    }
  return RealSymplecticMatrix(genus, std::move(entries));
}

RealSymplecticMatrix RealSymplecticMatrix::from_exact(const SymplecticMatrix& m) {
  std::vector<double> e;
  e.reserve(m.matrix().entries().size());
  for (const auto& v : m.matrix().entries()) e.push_back(v.get_d());
  return RealSymplecticMatrix(m.genus(), std::move(e));
}

RealSymplecticMatrix mul(const RealSymplecticMatrix& lhs, const RealSymplecticMatrix& rhs) {
  if (lhs.genus() != rhs.genus()) throw GenusMismatchError("mul: genus mismatch");
  const int n = lhs.dim();
  std::vector<double> out(static_cast<std::size_t>(n * n), 0.0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(i * n + j)] += lhs(i, k) * rhs(k, j);
  return RealSymplecticMatrix::make(lhs.genus(), std::move(out));
}

IntMatrix parse_int_matrix(std::string_view text) {
  std::vector<std::vector<BigInt>> rows;
  std::vector<BigInt> current;
  std::string token;
  auto flush_token = [&]() {
    std::string t;
    for (char ch : token)
      if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
    token.clear();
    if (t.empty()) throw ParseError("matrix literal: empty entry");
    std::size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (start == t.size()) throw ParseError("matrix literal: bad integer '" + t + "'");
    for (std::size_t i = start; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) throw ParseError("matrix literal: bad integer '" + t + "'");
    if (t[0] == '+') t.erase(0, 1);
    current.emplace_back(t, 10);
  };
  for (char ch : text) {
    if (ch == ',') {
      flush_token();
    } else if (ch == ';') {
      flush_token();
      rows.push_back(std::move(current));
      current.clear();
    } else {
      token.push_back(ch);
    }
  }
  flush_token();
  rows.push_back(std::move(current));
  const int n = static_cast<int>(rows.size());
  std::vector<BigInt> flat;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n)
      throw ParseError("matrix literal: expected square matrix, row has " + std::to_string(r.size()) + " entries, " +
                       std::to_string(n) + " rows");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return IntMatrix(n, n, std::move(flat));
}

SymplecticMatrix parse_symplectic(std::string_view text) {
  IntMatrix m = parse_int_matrix(text);
  if (m.rows() % 2 != 0) throw ParseError("matrix literal: dimension " + std::to_string(m.rows()) + " is odd");
  return SymplecticMatrix::make(m);
}

std::string format_literal(const IntMatrix& m) {
  std::string out;
  for (int i = 0; i < m.rows(); ++i) {
    if (i > 0) out.push_back(';');
    for (int j = 0; j < m.cols(); ++j) {
      if (j > 0) out.push_back(',');
      out += m(i, j).get_str();
    }
  }
  return out;
}

bool in_principal_congruence(const SymplecticMatrix& m, const CongruenceLevel& level) {
  const BigInt q = level.value();
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) {
      BigInt diff = m(i, j) - (i == j ? 1 : 0);
      if (diff % q != 0) return false;
    }
  return true;
}

std::string to_string(ParabolicClass c) {
  switch (c) {
    case ParabolicClass::Siegel:
      return "siegel";
    case ParabolicClass::Klingen1:
      return "klingen1";
    case ParabolicClass::Klingen2:
      return "klingen2";
    case ParabolicClass::None:
      return "none";
  }
  return "None";
}

bool in_siegel_parabolic(const SymplecticMatrix& m) { return m.c().is_zero(); }

bool in_klingen1(const SymplecticMatrix& m) {
  require_genus(m, 2, "in_klingen1");
  return m(0, 1) == 0 && m(2, 1) == 0 && m(3, 0) == 0 && m(3, 1) == 0 && m(3, 2) == 0;
}

bool in_klingen2(const SymplecticMatrix& m) {
  require_genus(m, 2, "in_klingen2");
  return m(1, 0) == 0 && m(2, 0) == 0 && m(2, 1) == 0 && m(2, 3) == 0 && m(3, 0) == 0;
}

ParabolicClass classify_parabolic(const SymplecticMatrix& m) {
  require_genus(m, 2, "classify_parabolic");
  if (in_siegel_parabolic(m)) return ParabolicClass::Siegel;
  if (in_klingen1(m)) return ParabolicClass::Klingen1;
  if (in_klingen2(m)) return ParabolicClass::Klingen2;
  return ParabolicClass::None;
}

BigInt epsilon(const SymplecticMatrix& m) {
  if (!in_siegel_parabolic(m)) throw PreconditionError("epsilon: matrix is not in the Siegel parabolic (C != 0)");
  return m.d().determinant();
}

SymplecticMatrix translation(const IntMatrix& s) {
  if (!s.is_symmetric()) throw PreconditionError("translation: S must be square symmetric");
  const int g = s.rows();
  return SymplecticMatrix::make(assemble(IntMatrix::identity(g), s, IntMatrix(g, g), IntMatrix::identity(g)));
}

SymplecticMatrix lower_translation(const IntMatrix& s) {
  if (!s.is_symmetric()) throw PreconditionError("lower_translation: S must be square symmetric");
  const int g = s.rows();
  return SymplecticMatrix::make(assemble(IntMatrix::identity(g), IntMatrix(g, g), s, IntMatrix::identity(g)));
}

SymplecticMatrix involution_I(int genus) { return SymplecticMatrix::make(standard_alternating(genus)); }

SymplecticMatrix swap_P() {
  return SymplecticMatrix::make(IntMatrix{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
}

SymplecticMatrix iota1(const SymplecticMatrix& m) {
  require_genus(m, 1, "iota1");
  IntMatrix out = IntMatrix::identity(4);
  out(0, 0) = m(0, 0);
  out(0, 2) = m(0, 1);
  out(2, 0) = m(1, 0);
  out(2, 2) = m(1, 1);
  return SymplecticMatrix::make(out);
}

SymplecticMatrix iota2(const SymplecticMatrix& m) {
  require_genus(m, 1, "iota2");
  IntMatrix out = IntMatrix::identity(4);
  out(1, 1) = m(0, 0);
  out(1, 3) = m(0, 1);
  out(3, 1) = m(1, 0);
  out(3, 3) = m(1, 1);
  return SymplecticMatrix::make(out);
}

SymplecticMatrix iota3(const SymplecticMatrix& m) {
  require_genus(m, 1, "iota3");
  const BigInt &a = m(0, 0), &b = m(0, 1), &c = m(1, 0), &d = m(1, 1);
  IntMatrix out(4, 4);
  out(0, 0) = a;
  out(0, 1) = b;
  out(1, 0) = c;
  out(1, 1) = d;
  out(2, 2) = d;
  out(2, 3) = -c;
  out(3, 2) = -b;
  out(3, 3) = a;
  return SymplecticMatrix::make(out);
}

namespace {

// Inverse of a unimodular integer matrix via the adjugate (g <= 4).
IntMatrix unimodular_inverse(const IntMatrix& u) {
  const BigInt det = u.determinant();
  if (det != 1 && det != -1) throw PreconditionError("matrix is not in GL(g, Z): det = " + det.get_str());
  const int n = u.rows();
  IntMatrix adj(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (int r = 0, mr = 0; r < n; ++r) {
        if (r == j) continue;
        for (int c = 0, mc = 0; c < n; ++c) {
          if (c == i) continue;
          minor(mr, mc++) = u(r, c);
        }
        ++mr;
      }
      BigInt cof = n == 1 ? BigInt(1) : minor.determinant();
      adj(i, j) = ((i + j) % 2 == 0) ? cof : BigInt(-cof);
    }
  return det * adj;  // det = +-1, so det * adj = adj / det
}

}  // namespace

SymplecticMatrix siegel_levi(const IntMatrix& u) {
  if (!u.square()) throw PreconditionError("siegel_levi: U must be square");
  const int g = u.rows();
  return SymplecticMatrix::make(assemble(u, IntMatrix(g, g), IntMatrix(g, g), unimodular_inverse(u).transpose()));
}

SymplecticMatrix siegel_parabolic(const IntMatrix& u, const IntMatrix& s) {
  if (!s.is_symmetric()) throw PreconditionError("siegel_parabolic: S must be symmetric");
  const int g = u.rows();
  const IntMatrix ut = u.transpose();
  return SymplecticMatrix::make(assemble(ut, ut * s, IntMatrix(g, g), unimodular_inverse(u)));
}

SymplecticMatrix bms_R_generator(long q, long x, Triangle which) {
  const BigInt qx = BigInt(q) * x;
  return which == Triangle::Upper ? sl2(1, qx, 0, 1) : sl2(1, 0, qx, 1);
}

SymplecticMatrix sl2(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d) {
  return SymplecticMatrix::make(1, {a, b, c, d});
}

}  // namespace siegelmult
