#include "spectile/json_io.hpp"

#include "spectile/errors.hpp"

#include <doctest.h>

using namespace spectile;

namespace {

Rational q(long num, long den = 1) { return Rational(num, den); }

const char* kBrick = R"json({"dim":2,"R":[["2","0"],["0","1"]],"offsets":[["0","0"],["1","1/2"]]})json";

}  // namespace

TEST_CASE("periodic set json round trip is exact") {
  PeriodicSet ps = parse_periodic_set(kBrick);
  CHECK(ps.dim() == 2);
  CHECK(ps.offsets().size() == 2);
  CHECK(ps.offsets()[1] == RatVec({q(1), q(1, 2)}));

  std::string dumped = periodic_set_to_json(ps);
  PeriodicSet again = parse_periodic_set(dumped);
  CHECK(ps == again);
  CHECK(periodic_set_to_json(again) == dumped);
}

TEST_CASE("periodic set json validation") {
  CHECK_THROWS_AS(parse_periodic_set("{nope"), ParseError);
  CHECK_THROWS_AS(parse_periodic_set(R"json({"dim":2,"R":[["1","0"]],"offsets":[["0","0"]]})json"),
                  ParseError);
  CHECK_THROWS_AS(parse_periodic_set(R"json({"dim":1,"R":[["1"]],"offsets":[["0","0"]]})json"),
                  ParseError);
  CHECK_THROWS_AS(parse_periodic_set(R"json({"dim":1,"R":[[0.5]],"offsets":[["0"]]})json"), ParseError);
}

TEST_CASE("construct requests build the described sets") {
  SUBCASE("dim1") {
    ConstructRequest req = parse_construct_request(R"json({"kind":"dim1","alpha":"1/3"})json");
    CHECK(build_construct(req) == build_1d(Dim1Form{q(1, 3)}));
  }

  SUBCASE("dim2") {
    ConstructRequest req = parse_construct_request(
        R"json({"kind":"dim2","orientation":"column","alpha":"0","beta":["0","1/2"]})json");
    CHECK(build_construct(req) == parse_periodic_set(kBrick));
  }

  SUBCASE("dim3") {
    ConstructRequest req = parse_construct_request(R"json({
      "kind":"dim3","period":2,"partition":["A","B"],
      "alpha0":{"0":"0"},"alpha1_period":2,"alpha1":{"0":["0","1/2"]},
      "beta0":{"1":"1/2"},"beta1_period":1,"beta1":{"1":["0"]}})json");
    PeriodicSet built = build_construct(req);
    CHECK(built.dim() == 3);
    CHECK(classify_pair(built).status == PairStatus::SpectralAndTiling);
  }

  SUBCASE("tower") {
    ConstructRequest req = parse_construct_request(
        R"json({"kind":"tower","alpha":"0","betas":[{"periods":[2],"values":["0","1/2"]}]})json");
    CHECK(build_construct(req) == parse_periodic_set(kBrick));
  }

  SUBCASE("cross") {
    std::string left = R"json({"dim":1,"R":[["2"]],"offsets":[["0"],["1"]]})json";
    std::string right = R"json({"dim":1,"R":[["1"]],"offsets":[["0"]]})json";
    ConstructRequest req = parse_construct_request(
        R"json({"kind":"cross","left":)json" + left + R"json(,"right":)json" + right +
        R"json(,"beta":[["0"],["1/2"]]})json");
    CHECK(build_construct(req) == parse_periodic_set(kBrick));
  }

  SUBCASE("unknown kinds are rejected") {
    CHECK_THROWS_AS(parse_construct_request(R"json({"kind":"sphere"})json"), ParseError);
    CHECK_THROWS_AS(parse_construct_request(R"json({"alpha":"0"})json"), ParseError);
  }
}

TEST_CASE("measure pair json") {
  MeasurePairInput input = parse_measure_pair(
      R"json({"group":[4],"mu":{"(0)":"1","(1)":"1"},"nu":{"(0)":"1/2","(2)":"1/2"}})json");
  CHECK(input.relation == "spectral");
  CHECK(input.mu.support() == std::vector<std::int64_t>{0, 1});
  CHECK(input.nu.weight(2) == q(1, 2));
  CHECK(is_spectral_pair_measures(input.mu, input.nu));

  std::string dumped = measure_to_json(input.nu);
  CHECK(dumped.find("\"(2)\": \"1/2\"") != std::string::npos);

  CHECK_THROWS_AS(parse_measure_pair(R"json({"group":[4],"mu":{"0":"1"},"nu":{}})json"), ParseError);
  CHECK_THROWS_AS(parse_measure_pair(
                      R"json({"group":[4],"mu":{"(0)":"-1"},"nu":{"(0)":"1"}})json"),
                  InvalidFormError);
  CHECK_THROWS_AS(
      parse_measure_pair(
          R"json({"group":[4],"mu":{"(0)":"1"},"nu":{"(0)":"1"},"relation":"whatever"})json"),
      ParseError);
  CHECK_THROWS_AS(parse_measure_pair(R"json({"group":[4],"mu":{"(0,1)":"1"},"nu":{}})json"), ParseError);
}

TEST_CASE("uncertainty input json") {
  SUBCASE("randomized battery form") {
    UncertaintyInput input = parse_uncertainty_input(
        R"json({"group":[2],"mu":{"(0)":"1","(1)":"1"},"nu":{"(0)":"1/2","(1)":"1/2"},"trials":25})json");
    CHECK(input.trials == 25);
    CHECK_FALSE(input.f.has_value());
  }

  SUBCASE("explicit function and windows") {
    UncertaintyInput input = parse_uncertainty_input(R"json({
      "group":[2],"mu":{"(0)":"1","(1)":"1"},"nu":{"(0)":"1/2","(1)":"1/2"},
      "f":{"(0)":[1.0,0.0]},"A":["(0)"],"B":["(0)","(1)"]})json");
    REQUIRE(input.f.has_value());
    CHECK((*input.f)[0] == Cplx(1.0, 0.0));
    CHECK(input.A == std::vector<std::int64_t>{0});
    CHECK(input.B == std::vector<std::int64_t>{0, 1});
    UncertaintyReport report = uncertainty_report(input.mu, input.nu, *input.f, *input.A, *input.B);
    CHECK(report.holds);
    CHECK(report.lhs == 1.0);
    CHECK(report.rhs == 1.0);
  }
}

TEST_CASE("recognition json carries the normalization data") {
  Recognition rec = recognize(parse_periodic_set(kBrick));
  std::string dumped = recognition_to_json(rec);
  CHECK(dumped.find("\"recognized\": true") != std::string::npos);
  CHECK(dumped.find("\"kind\": \"dim2\"") != std::string::npos);
  CHECK(dumped.find("\"translation\"") != std::string::npos);
  CHECK(dumped.find("\"permutation\"") != std::string::npos);
}
