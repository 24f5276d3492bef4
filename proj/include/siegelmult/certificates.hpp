#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "siegelmult/multipliers.hpp"
#include "siegelmult/random_families.hpp"

namespace siegelmult {

using Json = nlohmann::ordered_json;

// One verification step. `inputs` carries an "op" key plus arguments; `computed` is
// evaluate_step(inputs), so every step can be re-run from its inputs alone.
struct Step {
  std::string description;
  Json inputs;
  Json computed;
  Json expected;
  bool pass = false;
};

struct Certificate {
  std::string claim;
  std::optional<long> level;
  std::vector<Step> steps;
  std::string conclusion;
  bool pass = true;  // conjunction of step passes

  Json to_json() const;
  std::string dump() const;
  const Step* first_failure() const;
};

// The replay registry: evaluates a recorded step input. Matrices are text literals, big
// integers decimal strings. Throws Error on an unknown op.
Json evaluate_step(const Json& inputs);

struct ReplayReport {
  std::size_t checked = 0;
  std::size_t mismatches = 0;
  std::string first_mismatch;
};
// Re-evaluates every step: exact equality, or 1e-9 for floating point values.
ReplayReport replay(const Certificate& cert);

// Lemma tags accepted by verify_lemma.
const std::vector<std::string>& lemma_tags();
Certificate verify_lemma(const std::string& tag, int samples, std::uint64_t seed);

struct BmsMatrices {
  SymplecticMatrix h1, h2, h3, r1, r2, r3, r4;
};
// Builds the seven matrices (each validated as symplectic) and asserts R2 H3 = H1 H2 R1 R3 R4
// exactly; throws Error if the identity fails.
BmsMatrices bms_build(const BmsParameters& p);
bool bms_identity_holds(const BmsParameters& p);
// Requires c1 c2 != 0.
Certificate bms_w_check(const BmsParameters& p);

Certificate small_identities();

// Search: d the least prime = 1 mod q, c the least positive multiple of q with (c/d) = 1 and
// c != q x^2 (so the chain is non-degenerate).
Certificate krons_certificate(long q, long search_bound);
// The chain for a given (c, d); degenerate y = 0 accepted.
Certificate krons_certificate(long q, const BigInt& c, const BigInt& d);

// Preconditions are checked individually (PreconditionError naming the failed one).
Certificate zpir_check(const SymplecticMatrix& m, long q);

struct DeligneInstance {
  BigInt c, d;
  SymplecticMatrix m;
};
// Least c (multiple of q), then least d = 1 mod q with dq < c(q-1), gcd 1, (c/d) = -1,
// completed to all-positive M in Gamma_1[q]. Throws SearchExhaustedError past the bound.
DeligneInstance deligne_search(long q, long search_bound);
Certificate deligne_certificate(long q, long search_bound);

// The theta multiplier of weight 1/2, as used for the Mennicke symbols.
MultiplierEvaluation theta_evaluator(const SymplecticMatrix& m);

struct MennickeReport {
  std::vector<Certificate> attempts;  // one per level tried
  std::optional<long> minimal_q;
  Json to_json() const;
};

// Brackets [b/a] = v(iota3(M)), braces {c/d} = v(iota1(M))^{-1}. Checks MS1 (both moves), MS2,
// emaA and emaB on seeded instances at tolerance 1e-9; on failure retries with q doubled, up to
// max_doublings times. The evaluator name is recorded; only "theta" steps are replayable.
MennickeReport mennicke_axiom_check(const MultiplierEvaluator& evaluator, const std::string& evaluator_name,
                                    long q, int samples, std::uint64_t seed, int max_doublings = 4);
MennickeReport mennicke_axiom_check(long q, int samples, std::uint64_t seed, int max_doublings = 4);

}  // namespace siegelmult
