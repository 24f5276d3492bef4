#include <doctest.h>

#include "siegelmult/arithmetic.hpp"
#include "siegelmult/certificates.hpp"
#include "siegelmult/errors.hpp"

using namespace siegelmult;

namespace {

const Step& step(const Certificate& c, const std::string& description) {
  for (const auto& s : c.steps)
    if (s.description == description) return s;
  FAIL("no step " << description);
  throw Error("unreachable");
}

}  // namespace

TEST_CASE("certificate JSON shape") {
  const auto c = deligne_certificate(4, 10000);
  const Json j = c.to_json();
  CHECK(j.at("claim") == "deligne");
  CHECK(j.at("level") == 4);
  CHECK(j.at("pass") == true);
  for (const auto& s : j.at("steps")) {
    CHECK(s.contains("description"));
    CHECK(s.at("inputs").contains("op"));
    CHECK(s.contains("computed"));
    CHECK(s.contains("expected"));
  }
  CHECK(c.dump() == deligne_certificate(4, 10000).dump());
}

TEST_CASE("deligne instance at q = 4") {
  const auto inst = deligne_search(4, 10000);
  CHECK(inst.m.literal() == "13,8;8,5");
  const auto c = deligne_certificate(4, 10000);
  CHECK(c.pass);
  CHECK(c.conclusion.find("2r ∈ ℤ") != std::string::npos);
  CHECK(step(c, "N = M^2").computed == "233,144;144,89");
  CHECK(step(c, "(gamma/delta) = 1").computed == 1);
  CHECK(step(c, "zPir: table w(M, S) = 1").computed == 1);
  CHECK(step(c, "zPir: (c/d) = -1").computed == -1);
  CHECK(deligne_search(8, 10000).m.literal() == "113,80;24,17");
  CHECK(deligne_certificate(8, 10000).pass);
  CHECK_THROWS_AS(deligne_search(4, 5), SearchExhaustedError);
  CHECK_THROWS_AS(deligne_certificate(6, 10000), PreconditionError);
}

TEST_CASE("zPir") {
  const auto c = zpir_check(parse_symplectic("13,8;8,5"), 4);
  CHECK(c.pass);
  CHECK(step(c, "second row of MS is (c-qc+dq, -cq+d+dq)").computed == Json::array({"-4", "-7"}));
  CHECK(step(c, "table case is generic").computed == "generic");
  CHECK_THROWS_AS(zpir_check(parse_symplectic("5,4;16,13"), 4), PreconditionError);  // dq >= c(q-1)
  CHECK_THROWS_AS(zpir_check(parse_symplectic("2,1;1,1"), 4), PreconditionError);    // not in Gamma_1[4]
  CHECK_THROWS_AS(zpir_check(parse_symplectic("-3,-4;4,5"), 4), PreconditionError);  // signs
}

TEST_CASE("KronS chain") {
  const auto c = krons_certificate(4, 1000);
  CHECK(c.pass);
  CHECK(step(c, "x = sqrt(c/q) mod d").computed == "1");
  CHECK(step(c, "c = q x^2 + d q y").computed == "24");
  CHECK(step(c, "table w-value is 0").computed == 0);
  const auto deg = krons_certificate(4, 4, 5);
  CHECK(deg.pass);
  CHECK(deg.conclusion.find("y = 0") != std::string::npos);
  const auto c8 = krons_certificate(8, 1000);
  CHECK(c8.pass);
  CHECK(c8.conclusion.find("(16, 17)") != std::string::npos);
  CHECK_THROWS_AS(krons_certificate(3, 1000), PreconditionError);
}

TEST_CASE("BMS identity") {
  const auto p = bms_parameters(5, 4, 4);
  CHECK(p.d1 == 1);
  CHECK(p.b1 == 1);
  CHECK(p.y() == 13);
  CHECK(bms_identity_holds(p));
  CHECK_NOTHROW(bms_build(BmsParameters{1, 0, 0, 1, 0, 0, 1}));
  CHECK(bms_w_check(p).pass);
  CHECK(bms_w_check(bms_parameters(13, 4, -8)).pass);
  CHECK_THROWS_AS(validate(BmsParameters{5, 1, 4, 2, 1, 4, 1}), PreconditionError);
  CHECK_THROWS_AS(bms_w_check(BmsParameters{1, 0, 0, 1, 0, 0, 1}), PreconditionError);
}

TEST_CASE("small identities") {
  const auto c = small_identities();
  CHECK(c.pass);
  CHECK(step(c, "(1,1;0,1)(1,0;1-a,1)(1,-1;0,1) = (2-a,a-1;1-a,a), a=5").computed == "-3,4;-4,5");
  CHECK(c.steps[0].inputs.at("factors").size() == 3);
}

TEST_CASE("lemma certificates on fixed examples") {
  for (const auto& tag : lemma_tags()) {
    const auto c = verify_lemma(tag, 20, 3);
    CHECK_MESSAGE(c.pass, tag);
    CHECK(c.claim == tag);
  }
  CHECK_THROWS_AS(verify_lemma("nope", 10, 1), PreconditionError);
  CHECK_THROWS_AS(verify_lemma("ITra", 0, 1), PreconditionError);
}

TEST_CASE("replay reproduces every step") {
  for (const auto& c : {deligne_certificate(4, 10000), small_identities(), bms_w_check(bms_parameters(5, 4, 4)),
                        verify_lemma("TraI", 30, 9)}) {
    const auto r = replay(c);
    CHECK(r.checked == c.steps.size());
    CHECK(r.mismatches == 0);
  }
}

TEST_CASE("replay detects tampering") {
  auto c = deligne_certificate(4, 10000);
  c.steps[5].computed = Json(12345);
  const auto r = replay(c);
  CHECK(r.mismatches == 1);
  CHECK_FALSE(r.first_mismatch.empty());
  CHECK_THROWS_AS(evaluate_step(Json{{"op", "frobnicate"}}), Error);
}

TEST_CASE("Mennicke check with a trivial evaluator") {
  const MultiplierEvaluator one = [](const SymplecticMatrix&) {
    MultiplierEvaluation e;
    e.value = 1.0;
    return e;
  };
  const auto rep = mennicke_axiom_check(one, "one", 4, 3, 1, 0);
  REQUIRE(rep.attempts.size() == 1);
  CHECK(rep.minimal_q == 4);
}

TEST_CASE("Mennicke check escalates the level") {
  // a symbol that is wrong exactly at level 4
  const MultiplierEvaluator bad = [](const SymplecticMatrix& m) {
    MultiplierEvaluation e;
    e.value = in_principal_congruence(m, CongruenceLevel(8)) ? 1.0 : -1.0;
    return e;
  };
  const auto rep = mennicke_axiom_check(bad, "bad", 4, 3, 1, 2);
  CHECK(rep.attempts.size() == 2);
  CHECK_FALSE(rep.attempts[0].pass);
  CHECK(rep.attempts[0].first_failure() != nullptr);
  CHECK(rep.minimal_q == 8);
  const Json j = rep.to_json();
  CHECK(j.at("minimal_q") == 8);
  CHECK(j.at("attempts").size() == 2);
}
