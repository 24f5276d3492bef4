#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "siegelmult/arithmetic.hpp"
#include "siegelmult/certificates.hpp"
#include "siegelmult/errors.hpp"

using namespace siegelmult;

namespace {

// Exit codes.
constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Options {
  std::string m, n;
  bool exact = false, numeric = false;
  std::string convention;
  long q = 4;
  double r = 0.5;
  int samples = 100;
  std::uint64_t seed = 1;
  double tol = 0.0;  // 0: unset
  int trunc = 0;     // 0: automatic
  long bound = 10000;
  std::string out;
  std::string tag;
  long a = 5, c1 = 4, c2 = 4;
  int doublings = 4;
};

// "@path" reads the literal from a file.
std::string literal_arg(const std::string& text) {
  if (text.empty() || text[0] != '@') return text;
  std::ifstream in(text.substr(1));
  if (!in) throw siegelmult::ParseError("cannot read matrix file " + text.substr(1));
  std::stringstream ss;
  ss << in.rdbuf();
  std::string s = ss.str();
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  return s;
}

SymplecticMatrix matrix_arg(const std::string& text, const char* flag) {
  if (text.empty()) throw siegelmult::ParseError(std::string("missing ") + flag);
  return parse_symplectic(literal_arg(text));
}

double tolerance(const Options& o, double fallback) {
  if (o.tol > 0) return o.tol;
  if (const char* env = std::getenv("SIEGELMULT_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || !(v > 0)) throw PreconditionError("SIEGELMULT_TOL must be a positive number");
    return v;
  }
  return fallback;
}

void emit(const Options& o, const Json& j) {
  const std::string text = j.dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw PreconditionError("cannot write " + o.out);
  f << text;
}

int finish(const Options& o, const Certificate& c) {
  emit(o, c.to_json());
  std::cerr << c.claim << ": " << (c.pass ? "pass" : "FAIL") << " (" << c.steps.size() << " steps)\n";
  if (const Step* f = c.first_failure()) std::cerr << "first failing step: " << f->description << "\n";
  return c.pass ? kPass : kFail;
}

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json evaluation_json(const std::string& claim, const SymplecticMatrix& m, const MultiplierEvaluation& ev,
                     double tol) {
  Json values = Json::array();
  for (const auto& v : ev.sample_values) values.push_back(complex_json(v));
  const bool pass = ev.deviation < tol && std::abs(std::abs(ev.value) - 1.0) < tol;
  return Json{{"claim", claim},      {"m", m.literal()}, {"value", complex_json(ev.value)},
              {"deviation", ev.deviation}, {"samples", values}, {"tolerance", tol}, {"pass", pass}};
}

Json relation_json(const std::string& claim, const RelationReport& rep, double tol) {
  Json recs = Json::array();
  for (const auto& rec : rep.records) {
    recs.push_back(Json{{"m", rec.m.literal()}, {"n", rec.n.literal()}, {"w", rec.w},
                        {"lhs", complex_json(rec.lhs)}, {"rhs", complex_json(rec.rhs)}, {"deviation", rec.deviation}});
  }
  return Json{{"claim", claim},       {"r", rep.r},          {"tolerance", tol}, {"worst_deviation", rep.worst_deviation},
              {"pass", rep.holds},    {"records", recs}};
}

int report(const Options& o, const Json& j) {
  emit(o, j);
  const bool pass = j.at("pass").get<bool>();
  std::cerr << j.at("claim").get<std::string>() << ": " << (pass ? "pass" : "FAIL") << "\n";
  return pass ? kPass : kFail;
}

CocycleConvention cocycle_convention(const std::string& s) {
  if (s.empty() || s == "definition") return CocycleConvention::Definition;
  if (s == "automorphy") return CocycleConvention::Automorphy;
  throw PreconditionError("unknown cocycle convention " + s);
}

ThetaConvention theta_convention(const std::string& s) {
  if (s.empty() || s == "standard") return ThetaConvention::Standard;
  if (s == "doubled") return ThetaConvention::Doubled;
  throw PreconditionError("unknown theta convention " + s);
}

int cmd_w(const Options& o) {
  const SymplecticMatrix m = matrix_arg(o.m, "--m"), n = matrix_arg(o.n, "--n");
  if (m.genus() != n.genus()) throw GenusMismatchError("w: --m and --n differ in genus");
  const CocycleConvention conv = cocycle_convention(o.convention);
  if (o.exact) {
    if (m.genus() != 1) throw PreconditionError("w: --exact needs genus 1");
    // The table is in the automorphy convention.
    const long t = w_exact_genus1(m, n);
    std::cout << "w=" << (conv == CocycleConvention::Automorphy ? t : -t) << "\nresidual=0\n";
    return kPass;
  }
  const double tol = tolerance(o, kRoundingGuard);
  const CocycleValue v = cocycle(m, n, conv);
  std::cout << "w=" << v.w << "\nresidual=" << v.residual << "\n";
  if (!(v.residual < tol)) {
    std::cerr << "residual " << v.residual << " exceeds " << tol << "\n";
    return kFail;
  }
  return kPass;
}

std::vector<std::pair<SymplecticMatrix, SymplecticMatrix>> sl2_pairs(Rng& rng, int count) {
  std::vector<std::pair<SymplecticMatrix, SymplecticMatrix>> pairs;
  for (int k = 0; k < count; ++k) {
    SymplecticMatrix m = random_sl2(rng, 12);
    pairs.emplace_back(std::move(m), random_sl2(rng, 12));
  }
  return pairs;
}

int cmd_theta(const Options& o) {
  const double tol = tolerance(o, kMultiplierTolerance);
  const ThetaConvention conv = theta_convention(o.convention);
  if (!o.m.empty()) {
    const SymplecticMatrix m = matrix_arg(o.m, "--m");
    if (!is_theta_group(m)) throw PreconditionError("theta: matrix is not in the theta group");
    if (o.trunc > 0) {
      for (const auto& z : theta_samples(m)) {
        SeriesTruncation t{o.trunc};
        theta_value(z, t, conv);  // raises if the fixed radius is too small
      }
    }
    return report(o, evaluation_json("theta multiplier (" + to_string(conv) + ")", m,
                                     evaluate_theta_multiplier(m, theta_samples(m), conv), tol));
  }
  Rng rng(o.seed);
  std::vector<std::pair<SymplecticMatrix, SymplecticMatrix>> pairs;
  for (int k = 0; k < o.samples; ++k) {
    SymplecticMatrix m = random_theta_word(rng);
    pairs.emplace_back(std::move(m), random_theta_word(rng));
  }
  const MultiplierEvaluator ev = [conv](const SymplecticMatrix& x) {
    return evaluate_theta_multiplier(x, theta_samples(x), conv);
  };
  return report(o, relation_json("theta multiplier relation (" + to_string(conv) + ")",
                                 verify_multiplier_relation(ev, 0.5, pairs, tol), tol));
}

int cmd_delta(const Options& o) {
  const double tol = tolerance(o, kMultiplierTolerance);
  if (!o.m.empty()) {
    const SymplecticMatrix m = matrix_arg(o.m, "--m");
    Json j = evaluation_json("delta multiplier", m, delta_multiplier(o.r, m), tol);
    j["r"] = o.r;
    j["d"] = rademacher_integer(m);
    return report(o, j);
  }
  Rng rng(o.seed);
  const double r = o.r;
  const MultiplierEvaluator ev = [r](const SymplecticMatrix& x) { return delta_multiplier(r, x); };
  return report(o, relation_json("delta multiplier relation", verify_multiplier_relation(ev, r, sl2_pairs(rng, o.samples), tol),
                                 tol));
}

int cmd_mennicke(const Options& o) {
  const MennickeReport rep = mennicke_axiom_check(o.q, o.samples, o.seed, o.doublings);
  emit(o, rep.to_json());
  for (const auto& a : rep.attempts) {
    std::cerr << "q=" << *a.level << ": " << (a.pass ? "pass" : "FAIL");
    if (const Step* f = a.first_failure()) std::cerr << " (" << f->description << ", " << f->inputs.dump() << ")";
    std::cerr << "\n";
  }
  if (rep.minimal_q) std::cerr << "minimal passing q: " << *rep.minimal_q << "\n";
  return rep.minimal_q ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cocycles, multipliers and certificates on the symplectic group"};
  app.require_subcommand(1);
  Options o;

  auto add_out = [&](CLI::App* c) { c->add_option("--out", o.out, "write JSON here instead of stdout"); };
  auto add_tol = [&](CLI::App* c) {
    c->add_option("--tol", o.tol, "tolerance (default from SIEGELMULT_TOL)")->check(CLI::PositiveNumber);
  };
  auto add_sampling = [&](CLI::App* c, int default_samples) {
    o.samples = default_samples;
    c->add_option("--samples", o.samples)->check(CLI::PositiveNumber);
    c->add_option("--seed", o.seed);
  };

  auto* w = app.add_subcommand("w", "cocycle w(M, N)");
  w->add_option("--m", o.m)->required();
  w->add_option("--n", o.n)->required();
  auto* exact = w->add_flag("--exact", o.exact, "genus-1 table");
  w->add_flag("--numeric", o.numeric, "argument continuation (default)")->excludes(exact);
  w->add_option("--convention", o.convention, "definition | automorphy");
  add_tol(w);

  auto* lemma = app.add_subcommand("lemma", "verify a lemma on seeded samples");
  lemma->add_option("tag", o.tag)->required()->check(CLI::IsMember(lemma_tags()));
  add_sampling(lemma, 1000);
  add_out(lemma);

  auto* deligne = app.add_subcommand("deligne", "weight-constraint certificate");
  deligne->add_option("--q", o.q);
  deligne->add_option("--bound", o.bound);
  add_out(deligne);

  auto* krons = app.add_subcommand("krons", "square-root chain certificate");
  krons->add_option("--q", o.q);
  krons->add_option("--bound", o.bound);
  add_out(krons);

  auto* zpir = app.add_subcommand("zpir", "w(M, conjugate) = 1 check");
  zpir->add_option("--m", o.m)->required();
  zpir->add_option("--q", o.q);
  add_out(zpir);

  auto* bms = app.add_subcommand("bms", "seven-matrix identity and w checks");
  bms->add_option("--a", o.a);
  bms->add_option("--c1", o.c1);
  bms->add_option("--c2", o.c2);
  add_out(bms);

  auto* ident = app.add_subcommand("identities", "small matrix identities");
  add_out(ident);

  auto* theta = app.add_subcommand("theta", "theta multiplier at --m, or its relation on random pairs");
  theta->add_option("--m", o.m);
  theta->add_option("--convention", o.convention, "standard | doubled");
  theta->add_option("--trunc", o.trunc, "fixed lattice radius")->check(CLI::PositiveNumber);
  add_sampling(theta, 20);
  add_tol(theta);
  add_out(theta);

  auto* delta = app.add_subcommand("delta", "Delta multiplier at --m, or its relation on random pairs");
  delta->add_option("--m", o.m);
  delta->add_option("--r", o.r);
  add_sampling(delta, 50);
  add_tol(delta);
  add_out(delta);

  auto* menn = app.add_subcommand("mennicke", "Mennicke axioms for the theta bracket");
  menn->add_option("--q", o.q);
  menn->add_option("--doublings", o.doublings)->check(CLI::NonNegativeNumber);
  add_sampling(menn, 20);
  add_out(menn);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*w) return cmd_w(o);
    if (*lemma) return finish(o, verify_lemma(o.tag, o.samples, o.seed));
    if (*deligne) return finish(o, deligne_certificate(o.q, o.bound));
    if (*krons) return finish(o, krons_certificate(o.q, o.bound));
    if (*zpir) return finish(o, zpir_check(matrix_arg(o.m, "--m"), o.q));
    if (*bms) return finish(o, bms_w_check(bms_parameters(o.a, o.c1, o.c2)));
    if (*ident) return finish(o, small_identities());
    if (*theta) return cmd_theta(o);
    if (*delta) return cmd_delta(o);
    if (*menn) return cmd_mennicke(o);
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
