// One line per acceptance criterion: "[PASS|FAIL] <n> <summary> (<seconds>s)".
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>

#include "siegelmult/arithmetic.hpp"
#include "siegelmult/certificates.hpp"

using namespace siegelmult;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int n, double budget_seconds, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (s > budget_seconds) {
    o.pass = false;
    o.detail += " [over the " + std::to_string(static_cast<int>(budget_seconds)) + "s budget]";
  }
  if (!o.pass) ++failures;
  std::printf("[%s] %d %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", n, o.detail.c_str(), s);
  std::fflush(stdout);
}

Outcome cocycle_integrality() {
  Rng rng(1);
  double worst = 0.0;
  long broken = 0;
  auto run = [&](int g, int count) {
    for (int k = 0; k < count; ++k) {
      auto draw = [&] { return g == 1 ? random_sl2(rng, 50) : random_sp4(rng, 50); };
      const auto a = draw(), b = draw(), c = draw();
      const auto r = cocycle_identity_check(a, b, c);
      for (const auto* v : {&r.w12_3, &r.w1_2, &r.w1_23, &r.w2_3}) worst = std::max(worst, v->residual);
      if (!r.holds) ++broken;
    }
  };
  run(1, 10000);
  run(2, 1000);
  std::ostringstream os;
  os << "cocycle: 1e4 genus-1 + 1e3 genus-2 triples, worst residual " << worst << " (< 1e-6), identity failures "
     << broken;
  return {worst < 1e-6 && broken == 0, os.str()};
}

Outcome table_oracle() {
  Rng rng(2);
  long generic_mismatch = 0;
  for (int k = 0; k < 10000; ++k) {
    const auto [m, s] = random_genus1_pair(rng, Genus1Case::Generic, 50);
    if (!compare_table_with_oracle(m, s).agrees_automorphy) ++generic_mismatch;
  }
  std::ostringstream os;
  os << "table: 1e4 generic pairs, " << generic_mismatch << " mismatches vs oracle (automorphy sign); degenerate:";
  bool degenerate_ok = true;
  for (auto which : {Genus1Case::RowZero, Genus1Case::LeftZero, Genus1Case::LowerZero, Genus1Case::AllZero}) {
    long agree = 0, literal = 0;
    for (int k = 0; k < 1000; ++k) {
      const auto [m, s] = random_genus1_pair(rng, which, 50);
      const auto c = compare_table_with_oracle(m, s);
      agree += c.agrees_automorphy;
      literal += c.agrees_definition;
    }
    degenerate_ok = degenerate_ok && agree == 1000;
    os << " " << to_string(which) << " " << agree << "/1000 (literal sign " << literal << ")";
  }
  const auto e = compare_table_with_oracle(sl2(-1, 0, 0, -1), sl2(-1, 0, 0, -1));
  os << "; M=S=-E: table " << e.table << ", literal definition " << e.oracle_definition;
  return {generic_mismatch == 0 && degenerate_ok && e.table == 1 && e.oracle_definition == -1, os.str()};
}

Outcome lemma_suite() {
  std::ostringstream os;
  os << "lemmas (1e3 samples each):";
  bool all = true;
  for (const auto& tag : lemma_tags()) {
    const auto c = verify_lemma(tag, 1000, 2024);
    const auto r = replay(c);
    const bool ok = c.pass && r.mismatches == 0;
    all = all && ok;
    os << " " << tag << (ok ? "" : "[FAIL]");
  }
  return {all, os.str()};
}

Outcome bms() {
  Rng rng(4);
  long identity_fail = 0;
  for (int k = 0; k < 1000; ++k)
    if (!bms_identity_holds(random_bms(rng, 1000000))) ++identity_fail;
  long w_fail = 0, checks = 0;
  for (int k = 0; k < 1000; ++k) {
    const auto p = random_bms(rng, 12);
    if (p.c1 == 0 || p.c2 == 0) continue;
    ++checks;
    if (!bms_w_check(p).pass) ++w_fail;
  }
  const bool fixed = bms_w_check(bms_parameters(5, 4, 4)).pass && bms_w_check(bms_parameters(13, 4, -8)).pass;
  std::ostringstream os;
  os << "BMS: identity on 1e3 tuples (|entries| <= 1e6), " << identity_fail << " failures; w(R2,H3)=0 and Im J checks on "
     << checks << " tuples, " << w_fail << " failures";
  return {identity_fail == 0 && w_fail == 0 && checks > 0 && fixed, os.str()};
}

Outcome multiplier_relations() {
  Rng rng(5);
  std::ostringstream os;
  bool ok = true;
  os << "relations:";
  for (double r : {0.3, 0.5, 1.0, 3.5}) {
    std::vector<std::pair<SymplecticMatrix, SymplecticMatrix>> pairs;
    for (int k = 0; k < 100; ++k) {
      auto m = random_sl2(rng, 20);
      pairs.emplace_back(m, random_sl2(rng, 20));
    }
    const MultiplierEvaluator ev = [r](const SymplecticMatrix& m) { return delta_multiplier(r, m); };
    const auto rep = verify_multiplier_relation(ev, r, pairs);
    ok = ok && rep.holds;
    os << " delta r=" << r << " worst " << rep.worst_deviation << ";";
  }
  std::vector<std::pair<SymplecticMatrix, SymplecticMatrix>> pairs;
  for (int k = 0; k < 100; ++k) {
    auto m = random_theta_word(rng);
    pairs.emplace_back(m, random_theta_word(rng));
  }
  const MultiplierEvaluator th = [](const SymplecticMatrix& m) { return theta_multiplier(m); };
  const auto rep = verify_multiplier_relation(th, 0.5, pairs);
  ok = ok && rep.holds;
  os << " theta (standard exponent) worst " << rep.worst_deviation << " (< 1e-9)";
  return {ok, os.str()};
}

Outcome bridge() {
  Rng rng(6);
  long bad = 0;
  for (int k = 0; k < 1000; ++k) {
    const auto m = random_sl2(rng, 50), n = random_sl2(rng, 50);
    if (rademacher_integer(m * n) - rademacher_integer(m) - rademacher_integer(n) != 12 * automorphy_cocycle(m, n).w)
      ++bad;
  }
  return {bad == 0, "bridge d(MN)-d(M)-d(N)=12w on 1e3 pairs, " + std::to_string(bad) + " failures"};
}

Outcome deligne() {
  const auto c = deligne_certificate(4, 10000);
  const auto m = deligne_search(4, 10000).m;
  const bool facts = m.literal() == "13,8;8,5" && kronecker(8, 5) == -1 &&
                     automorphy_cocycle(m, sl2(-3, -4, 4, 5)).w == 1 && w_cocycle(m, m).w == 0 &&
                     power(m, 2).literal() == "233,144;144,89" && kronecker(144, 89) == 1;
  const bool concl = c.conclusion.find("2r ∈ ℤ") != std::string::npos;
  const bool stable = c.dump() == deligne_certificate(4, 10000).dump();
  const bool replayed = replay(c).mismatches == 0;
  std::ostringstream os;
  os << "deligne q=4: M=" << m.literal() << ", pass=" << c.pass << ", facts=" << facts << ", byte-stable=" << stable
     << ", replay=" << replayed;
  return {c.pass && facts && concl && stable && replayed, os.str()};
}

Outcome kronecker_rules() {
  Rng rng(8);
  long bad = 0, tried = 0;
  auto odd = [&](long b) {
    for (;;)
      if (long d = rng.uniform(-b, b); d % 2 != 0) return d;
  };
  auto nz = [&](long b) {
    for (;;)
      if (long c = rng.uniform(-b, b); c != 0) return c;
  };
  for (int k = 0; k < 10000; ++k) {
    const long c1 = nz(1000), c2 = nz(1000), d = odd(999), d1 = odd(999), d2 = odd(999);
    tried += 4;
    bad += kronecker(c1 * c2, d) != kronecker(c1, d) * kronecker(c2, d);
    bad += kronecker(c1, d1 * d2) != kronecker(c1, d1) * kronecker(c1, d2);
    const long c3 = c1 + d * rng.uniform(-20, 20);
    if (c3 != 0 && (d > 0 || c1 * c3 > 0)) bad += kronecker(c1, d) != kronecker(c3, d);
    const long c = 2 * nz(200);
    const long e = d1 + (c % 4 == 0 ? c : 4 * c) * rng.uniform(-20, 20);
    bad += kronecker(c, d1) != kronecker(c, e);
    bad += kronecker(c1, -1) != (c1 > 0 ? 1 : -1);
  }
  long oracle_bad = 0;
  for (long p = 3; p <= 200; p += 2) {
    if (!is_prime(p)) continue;
    for (long c = 1; c <= 200; ++c) oracle_bad += kronecker(c, p) != legendre_oracle(c, p);
  }
  std::ostringstream os;
  os << "kronecker: four rules on 1e4 instances, " << bad << " violations; Euler oracle c<=200, p<=200: " << oracle_bad
     << " disagreements";
  return {bad == 0 && oracle_bad == 0, os.str()};
}

Outcome mennicke() {
  std::ostringstream os;
  os << "mennicke (theta bracket, 20 instances/level):";
  for (long q : {4L, 8L, 16L}) {
    const auto rep = mennicke_axiom_check(q, 20, 9, 0);
    const auto& a = rep.attempts.front();
    std::map<std::string, int> failed;
    for (const auto& s : a.steps)
      if (!s.pass) ++failed[s.inputs.at("op").get<std::string>()];
    os << " q=" << q << (a.pass ? " pass" : " fail");
    for (const auto& [op, n] : failed) os << " " << op << "x" << n;
    if (const Step* f = a.first_failure()) {
      // the witness must replay to the same value
      const double again = evaluate_step(f->inputs).get<double>();
      os << " witness " << f->inputs.dump() << (std::abs(again - f->computed.get<double>()) < 1e-9 ? " (replays)" : " (NOT reproducible)");
    }
    os << ";";
  }
  const auto full = mennicke_axiom_check(4, 20, 9, 4);
  os << " minimal passing q from 4 by doubling: " << (full.minimal_q ? std::to_string(*full.minimal_q) : "none");
  return {full.minimal_q.has_value(), os.str()};
}

}  // namespace

int main() {
  criterion(1, 60, cocycle_integrality);
  criterion(2, 30, table_oracle);
  criterion(3, 300, lemma_suite);
  criterion(4, 60, bms);
  criterion(5, 120, multiplier_relations);
  criterion(6, 60, bridge);
  criterion(7, 5, deligne);
  criterion(8, 10, kronecker_rules);
  criterion(9, 120, mennicke);
  return failures == 0 ? 0 : 1;
}
