#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "extk/numcheck.hpp"
#include "extk/sampling.hpp"

using namespace extk;
using std::complex;

TEST_CASE("wirtinger derivatives on reference fields") {
  const double h = 1e-4;
  {
    ComplexField f = [](complexd z) { return z; };
    const auto [dz, dzb] = wirtinger(f, {0.3, -0.2}, h);
    CHECK(std::abs(dz - 1.0) < 1e-9);
    CHECK(std::abs(dzb) < 1e-9);
  }
  {
    ComplexField f = [](complexd z) { return complexd(std::norm(z), 0.0); };
    const auto [dz, dzb] = wirtinger(f, {1.0, 0.0}, h);
    CHECK(std::abs(dz - 1.0) < 1e-9);   // conj(z) at z = 1
    CHECK(std::abs(dzb - 1.0) < 1e-9);  // z at z = 1
  }
  {
    ComplexField f = [](complexd z) { return complexd(z.real(), 0.0); };
    const auto [dz, dzb] = wirtinger(f, {-0.4, 0.9}, h);
    CHECK(std::abs(dz - 0.5) < 1e-9);
    CHECK(std::abs(dzb - 0.5) < 1e-9);
  }
}

TEST_CASE("curvature from density") {
  const double h = 1e-3;
  RealField flat = [](complexd) { return 4.0; };
  CHECK(std::abs(curvature_from_density(flat, {0.1, 0.2}, h)) < 1e-8);

  RealField sphere = [](complexd z) {
    const double t = 1.0 + std::norm(z);
    return 4.0 / (t * t);
  };
  CHECK(std::abs(curvature_from_density(sphere, {0.3, 0.0}, h) - 1.0) < 1e-6);

  GermEvaluator gen(make_generic({1.0, 0.0}, 1.0));
  RealField den = [&](complexd z) { return gen.density_at(z); };
  CHECK(std::abs(curvature_from_density(den, {0.0, 0.0}, h) - 1.0) < 1e-5);

  RealField bad = [](complexd z) { return z.real(); };
  CHECK_THROWS_AS(curvature_from_density(bad, {0.0, 0.0}, h), DomainError);
}

TEST_CASE("gradient field models") {
  const double h = 1e-4;
  {
    GermEvaluator ev(make_einstein(2.0));
    RealField den = [&](complexd z) { return ev.density_at(z); };
    RealField cur = [&](complexd z) { return ev.curvature_at(z); };
    CHECK(std::abs(gradient_field(den, cur, {0.2, 0.1}, h)) < 1e-8);
  }
  {
    GermEvaluator ev(make_generic({1.0, 0.0}, 1.0));
    RealField den = [&](complexd z) { return ev.density_at(z); };
    RealField cur = [&](complexd z) { return ev.curvature_at(z); };
    for (complexd z : {complexd{0.05, 0.02}, complexd{-0.08, 0.1}})
      CHECK(std::abs(gradient_field(den, cur, z, h) - 1.0) < 1e-5);
  }
  {
    const auto spec = make_exceptional({1.0, 2.0 / 3.0}, 2.0, 1.0);
    const double sigma = std::get<ExceptionalGerm>(spec).sigma;
    GermEvaluator ev(spec);
    RealField den = [&](complexd z) { return ev.density_at(z); };
    RealField cur = [&](complexd z) { return ev.curvature_at(z); };
    for (complexd z : {complexd{0.1, 0.05}, complexd{-0.02, 0.12}}) {
      const complexd want = z / sigma;
      CHECK(std::abs(gradient_field(den, cur, z, h) - want) <
            1e-5 * std::max(1.0, std::abs(want)));
    }
  }
}

TEST_CASE("verify passes on constructed germs") {
  {
    const auto rep = verify(make_einstein(0.0), 0.5);
    CHECK(rep.pass);
    CHECK(rep.max_curvature_residual < 1e-8);
    CHECK(rep.max_holomorphy_residual < 1e-8);
    CHECK(rep.max_model_residual < 1e-8);
  }
  {
    const auto spec = make_generic({1.0, 0.0}, 1.0);
    const auto rep = verify(spec, 0.5 * domain_radius(spec));
    CHECK(rep.pass);
  }
  {
    const auto spec = make_exceptional({1.0, 2.0 / 3.0}, 2.0, 1.0);
    const auto rep = verify(spec, 0.5 * domain_radius(spec));
    CHECK(rep.pass);
  }
}

TEST_CASE("negative control: a corrupted density must fail") {
  const auto spec = make_generic({1.0, 0.0}, 1.0);
  GermEvaluator ev(spec);
  const double radius = 0.5 * ev.domain_radius();
  RealField den = [&](complexd z) {
    return ev.density_at(z) * (1.0 + 0.01 * z.real());
  };
  RealField cur = [&](complexd z) { return ev.curvature_at(z); };
  const auto rep = verify_fields(den, cur, model_gradient_field(spec), radius);
  CHECK(!rep.pass);
  CHECK(rep.max_holomorphy_residual > 1e-3);
}

TEST_CASE("second-order convergence of the curvature residual") {
  // h large enough that truncation dominates the difference-quotient
  // roundoff floor, halving still keeps h well above 1e-4 * radius
  auto ratio_for = [](const GermSpec& spec) {
    const double R =
        0.5 * std::min(domain_radius(spec), 1.0);
    VerifyOptions opts;
    opts.h = 4e-3 * R;
    const auto rep_h = verify(spec, R, opts);
    opts.h = 2e-3 * R;
    const auto rep_h2 = verify(spec, R, opts);
    return rep_h.max_curvature_residual / rep_h2.max_curvature_residual;
  };
  const double r1 = ratio_for(make_einstein(1.0));
  CHECK(r1 > 3.0);
  CHECK(r1 < 5.0);
  const double r2 = ratio_for(make_generic({1.0, 0.0}, 1.0));
  CHECK(r2 > 3.0);
  CHECK(r2 < 5.0);
}

TEST_CASE("parallel sweep matches the serial reference exactly") {
  const auto specs = sample_generic_specs(3, 424242);
  for (const auto& spec : specs) {
    const double R = 0.4 * domain_radius(spec);
    VerifyOptions serial;
    serial.parallel = false;
    VerifyOptions parallel;
    parallel.parallel = true;
    const auto a = verify(spec, R, serial);
    const auto b = verify(spec, R, parallel);
    CHECK(a.max_curvature_residual == b.max_curvature_residual);
    CHECK(a.max_holomorphy_residual == b.max_holomorphy_residual);
    CHECK(a.max_model_residual == b.max_model_residual);
    CHECK(a.pass == b.pass);
  }
}

TEST_CASE("grid guard and argument validation") {
  const auto spec = make_generic({1.0, 0.0}, 1.0);
  const double R = domain_radius(spec);
  CHECK_THROWS_AS(verify(spec, R), DomainError);
  CHECK_THROWS_AS(verify(spec, 2.0 * R), DomainError);
  VerifyOptions opts;
  opts.n_points = 4;
  CHECK_THROWS_AS(verify(spec, 0.5 * R, opts), DomainError);
}
