#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chatelet/bundle.hpp"

using namespace chatelet;

namespace {
Certificate sample_cert() {
  Certificate c;
  c.kind = "invariant-profile";
  c.inputs = {{"p1", "73"}, {"p2", "5"}};
  ResultItem a;
  a.claim = "invariant value set at 73+";
  a.status = Status::Enumerated;
  a.depth = 4;
  a.data = {{"place", "73+"}, {"invariants", "{0, 1/2}"}, {"half_witness_x", "1/73"}};
  ResultItem b;
  b.claim = "rank input";
  b.status = Status::CitedAssumption;
  b.source = "external tables";
  c.results = {a, b};
  return c;
}
}  // namespace

TEST_CASE("status strings round-trip") {
  for (Status s : {Status::Proved, Status::Enumerated, Status::CitedAssumption,
                   Status::Failed, Status::Inconclusive})
    CHECK(parse_status(status_str(s)) == s);
  CHECK_THROWS_AS(parse_status("nope"), std::invalid_argument);
}

TEST_CASE("json round-trip is lossless") {
  Certificate c = sample_cert();
  std::string j = emit_certificate(c, true);
  Certificate back = parse_certificate(j);
  CHECK(back.kind == c.kind);
  CHECK(back.version == c.version);
  CHECK(back.inputs == c.inputs);
  REQUIRE(back.results.size() == c.results.size());
  for (size_t i = 0; i < c.results.size(); ++i) {
    CHECK(back.results[i].claim == c.results[i].claim);
    CHECK(back.results[i].status == c.results[i].status);
    CHECK(back.results[i].data == c.results[i].data);
    CHECK(back.results[i].depth == c.results[i].depth);
    CHECK(back.results[i].source == c.results[i].source);
  }
  CHECK(emit_certificate(back, true) == j);
}

TEST_CASE("emission is byte-identical across runs") {
  Certificate c1 = sample_cert(), c2 = sample_cert();
  CHECK(emit_certificate(c1, true) == emit_certificate(c2, true));
  CHECK(emit_certificate(c1, false) == emit_certificate(c2, false));
}

TEST_CASE("empty results are valid") {
  Certificate c;
  c.kind = "empty";
  std::string j = emit_certificate(c, true);
  Certificate back = parse_certificate(j);
  CHECK(back.results.empty());
  CHECK(back.kind == "empty");
  CHECK(c.passed());
}

TEST_CASE("pass, fail, inconclusive predicates") {
  Certificate c = sample_cert();
  CHECK(c.passed());
  ResultItem bad;
  bad.claim = "x";
  bad.status = Status::Failed;
  c.results.push_back(bad);
  CHECK(c.has_failure());
  CHECK_FALSE(c.passed());
  c.results.pop_back();
  bad.status = Status::Inconclusive;
  c.results.push_back(bad);
  CHECK(c.has_inconclusive());
  CHECK_FALSE(c.passed());
}

TEST_CASE("rationals and invariants are serialized exactly") {
  std::string j = emit_certificate(sample_cert(), true);
  CHECK(j.find("\"1/73\"") != std::string::npos);
  CHECK(j.find("{0, 1/2}") != std::string::npos);
  CHECK(j.find("\"73+\"") != std::string::npos);
  CHECK(j.find("e-") == std::string::npos);  // no floats anywhere
}

TEST_CASE("profile and wa certificates serialize") {
  V0 v0 = build_v0(73, 5);
  QuadField K3 = make_quad_field(3);
  QProfile qp = profile_over_q(v0, 20, 2);
  ExtProfile ep = profile_over_ext(v0, K3, 20, 2);
  Certificate pc = profile_certificate(v0, qp, ep);
  Certificate back = parse_certificate(emit_certificate(pc, true));
  CHECK(back.results.size() == pc.results.size());
  CHECK(emit_certificate(back, true) == emit_certificate(pc, true));

  WAFailureCertificate w = wa_failure_certificate(K3, 73, 5, {}, 20, 2);
  Certificate wc = wa_certificate(w);
  CHECK(parse_certificate(emit_certificate(wc, true)).results.size() == wc.results.size());
  bool sum_seen = false;
  for (auto& [k, v2] : wc.results[0].data)
    if (k == "adelic_sum" && v2 == "1/2") sum_seen = true;
  CHECK(sum_seen);
}

TEST_CASE("config validation") {
  Config ok;
  CHECK_NOTHROW(ok.validate());
  Config bad;
  bad.depth = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}
