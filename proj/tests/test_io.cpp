#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <random>

#include "extk/json_io.hpp"
#include "extk/sampling.hpp"

using namespace extk;

namespace {

bool bit_equal(double a, double b) {
  return std::memcmp(&a, &b, sizeof(double)) == 0;
}

}  // namespace

TEST_CASE("germ specs parse from the documented encodings") {
  {
    const auto spec = germ_from_json_text(R"({"kind":"einstein","K0":1.0})");
    CHECK(std::get<EinsteinGerm>(spec).K0 == 1.0);
  }
  {
    const auto spec =
        germ_from_json_text(R"({"kind":"generic","C":1.0,"Cprime":0.0,"K0":1.0})");
    const auto& g = std::get<GenericGerm>(spec);
    CHECK(g.cubic.C == 1.0);
    CHECK(g.K0 == 1.0);
  }
  {
    const auto spec = germ_from_json_text(
        R"({"kind":"exceptional","C":1.0,"Cprime":0.6666666666666666,"K0":2.0,"lambda":1.0})");
    const auto& e = std::get<ExceptionalGerm>(spec);
    CHECK(e.lambda == 1.0);
    // sigma is recomputed on load, never deserialized
    CHECK(e.sigma == doctest::Approx(-1.0 / 3.0).epsilon(1e-14));
  }
}

TEST_CASE("round trips are bit exact") {
  std::mt19937_64 rng(606);
  for (const auto& spec : sample_generic_specs(500, 11)) {
    const auto back = germ_from_json_text(to_json(spec).dump());
    const auto& a = std::get<GenericGerm>(spec);
    const auto& b = std::get<GenericGerm>(back);
    REQUIRE(bit_equal(a.cubic.C, b.cubic.C));
    REQUIRE(bit_equal(a.cubic.Cprime, b.cubic.Cprime));
    REQUIRE(bit_equal(a.K0, b.K0));
  }
  for (const auto& spec : sample_exceptional_specs(500, 12)) {
    const auto back = germ_from_json_text(to_json(spec).dump());
    const auto& a = std::get<ExceptionalGerm>(spec);
    const auto& b = std::get<ExceptionalGerm>(back);
    REQUIRE(bit_equal(a.cubic.C, b.cubic.C));
    REQUIRE(bit_equal(a.cubic.Cprime, b.cubic.Cprime));
    REQUIRE(bit_equal(a.K0, b.K0));
    REQUIRE(bit_equal(a.lambda, b.lambda));
    REQUIRE(bit_equal(a.sigma, b.sigma));
  }
  // raw doubles through the serializer
  for (int i = 0; i < 2000; ++i) {
    const double v = std::ldexp(uniform01(rng) - 0.5,
                                static_cast<int>(uniform(rng, -40, 40)));
    const auto spec = make_einstein(v);
    const auto back = germ_from_json_text(to_json(spec).dump());
    REQUIRE(bit_equal(std::get<EinsteinGerm>(back).K0, v));
  }
}

TEST_CASE("invalid germ JSON is rejected") {
  CHECK_THROWS_AS(germ_from_json_text("not json"), DomainError);
  CHECK_THROWS_AS(germ_from_json_text(R"({"kind":"nope","K0":1.0})"),
                  DomainError);
  CHECK_THROWS_AS(germ_from_json_text(R"({"kind":"einstein"})"), DomainError);
  CHECK_THROWS_AS(germ_from_json_text(R"({"kind":"einstein","K0":"x"})"),
                  DomainError);
  // validation runs on load
  CHECK_THROWS_AS(
      germ_from_json_text(R"({"kind":"generic","C":1.0,"Cprime":0.0,"K0":5.0})"),
      DomainError);
}

TEST_CASE("report and classification serializers use the documented keys") {
  VerificationReport rep;
  rep.grid = {0.25, 64};
  rep.max_curvature_residual = 1e-6;
  rep.max_holomorphy_residual = 2e-6;
  rep.max_model_residual = 3e-6;
  rep.step_h = 2.5e-4;
  rep.pass = true;
  const auto j = to_json(rep);
  CHECK(j["pass"] == true);
  CHECK(j["max_curvature_residual"] == 1e-6);
  CHECK(j["max_holomorphy_residual"] == 2e-6);
  CHECK(j["max_model_residual"] == 3e-6);
  CHECK(j["h"] == 2.5e-4);
  CHECK(j["grid"]["radius"] == 0.25);
  CHECK(j["grid"]["n"] == 64);

  CHECK(to_json(HcmuClass{GenericHcmu{2.0, 0.5}})["kind"] == "generic_hcmu");
  CHECK(to_json(HcmuClass{ExceptionalConeHcmu{2.0, 0.5, -1}})["kind"] ==
        "exceptional_cone");
  CHECK(to_json(HcmuClass{ExceptionalCuspHcmu{2.0}})["kind"] ==
        "exceptional_cusp");
  CHECK(to_json(HcmuClass{NotHcmu{"complex roots"}})["kind"] == "not_hcmu");

  CHECK(std::string(component_name(Component::generic)) == "generic");
  CHECK(std::string(component_name(Component::exceptional_sigma_positive)) ==
        "exceptional_sigma_positive");
  CHECK(std::string(component_name(Component::exceptional_sigma_negative)) ==
        "exceptional_sigma_negative");

  const auto cj = to_json(ModuliCoords{GenericChart{1.0, -0.4, 1.0}});
  CHECK(cj["kind"] == "generic_chart");
  const auto ej = to_json(ModuliCoords{ExceptionalChart{2.0, -3.0, 0.0}});
  CHECK(ej["kind"] == "exceptional_chart");
  CHECK(ej["t"] == -3.0);
}
