#include <doctest.h>

#include "inls/model.hpp"
#include "inls/weights.hpp"
#include "oracles.hpp"

using namespace inls;

namespace {

ModelSpec k_model(KFamilyTag tag, int sign = 1, Real eps = 0.0, Real b = 0.5) {
  ModelSpec m;
  m.b = b;
  m.K_family = {tag, sign, eps};
  return m;
}

}  // namespace

TEST_CASE("model validation rejects out-of-range parameters") {
  ModelSpec m;
  m.b = 1.5;
  CHECK_THROWS_WITH_AS(m.validate(), "b must lie in (0,1)", ConfigError);
  m.b = 0.5;
  m.sigma = 0.0;
  CHECK_THROWS_AS(m.validate(), ConfigError);
  m.sigma = 1.0;
  m.mu = -1.0;
  CHECK_THROWS_AS(m.validate(), ConfigError);
  m.mu = 0.0;
  m.K_family = {KFamilyTag::K1_pure, -1, 0.0};
  CHECK_THROWS_AS(m.validate(), ConfigError);
}

TEST_CASE("K family spot values") {
  const ModelSpec k1 = k_model(KFamilyTag::K1_pure);
  CHECK(eval_K(k1, 4.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(eval_K(k1, -4.0) == doctest::Approx(0.5).epsilon(1e-14));

  const ModelSpec k2 = k_model(KFamilyTag::K2_pure, -1);
  CHECK(eval_K(k2, 1.0) == doctest::Approx(-1.0).epsilon(1e-14));

  const ModelSpec k3 = k_model(KFamilyTag::K3_decay, -1);
  CHECK(eval_K(k3, 1.0) ==
        doctest::Approx(-std::pow(2.0, -1.5)).epsilon(1e-14));

  const ModelSpec k4 = k_model(KFamilyTag::K4_decay, 1);
  CHECK(eval_K(k4, 3.0) ==
        doctest::Approx(std::pow(3.0, -0.5) * std::pow(4.0, -3.0))
            .epsilon(1e-14));

  const ModelSpec off = k_model(KFamilyTag::none);
  CHECK(eval_K(off, 0.0) == 0.0);
  CHECK(eval_K_prime(off, 0.0) == 0.0);
}

TEST_CASE("pure families are singular at the origin") {
  const ModelSpec k1 = k_model(KFamilyTag::K1_pure);
  CHECK_THROWS_AS(eval_K(k1, 0.0), SingularEvalError);
  CHECK_THROWS_AS(eval_K_prime(k1, 0.0), SingularEvalError);
  const ModelSpec smooth = k_model(KFamilyTag::K1_pure, 1, 0.1);
  CHECK(std::isfinite(eval_K(smooth, 0.0)));
  CHECK(eval_K_prime(smooth, 0.0) == doctest::Approx(0.0));
}

TEST_CASE("mollified family approaches the pure family away from 0") {
  const ModelSpec pure = k_model(KFamilyTag::K3_decay, -1);
  const ModelSpec moll = k_model(KFamilyTag::K3_decay, -1, 1e-6);
  for (Real x : {0.5, 1.0, -2.0, 7.5}) {
    CHECK(eval_K(moll, x) == doctest::Approx(eval_K(pure, x)).epsilon(1e-9));
    CHECK(eval_K_prime(moll, x) ==
          doctest::Approx(eval_K_prime(pure, x)).epsilon(1e-6));
  }
}

TEST_CASE("K derivative matches a finite-difference oracle") {
  for (KFamilyTag tag : {KFamilyTag::K1_pure, KFamilyTag::K2_pure,
                         KFamilyTag::K3_decay, KFamilyTag::K4_decay}) {
    const int sign = (tag == KFamilyTag::K1_pure) ? 1 : -1;
    const ModelSpec m = k_model(tag, sign, 0.05);
    auto f = [&](Real x) { return eval_K(m, x); };
    for (Real x : {-3.0, -0.4, 0.7, 2.5}) {
      CHECK(eval_K_prime(m, x) ==
            doctest::Approx(oracles::derivative(f, x, 1e-4)).epsilon(1e-7));
    }
  }
}

TEST_CASE("K1 class membership on the grid") {
  const GridSpec grid = make_grid(20.0, 256);
  CHECK(satisfies_K1(k_model(KFamilyTag::K1_pure), grid));
  CHECK(satisfies_K1(k_model(KFamilyTag::K1_pure, 1, 0.1), grid));
  CHECK_FALSE(satisfies_K1(k_model(KFamilyTag::K2_pure, -1), grid));
}

TEST_CASE("potential families and derivatives") {
  PotentialSpec yuk{PotentialTag::yukawa, 0.5, 1.0, V0Variant::bounded};
  CHECK(eval_V(yuk, 1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  CHECK(eval_V(yuk, -4.0) ==
        doctest::Approx(0.5 * std::exp(-4.0)).epsilon(1e-14));
  auto f = [&](Real x) { return eval_V(yuk, x); };
  for (Real x : {-2.0, 0.5, 3.0}) {
    CHECK(eval_V_prime(yuk, x) ==
          doctest::Approx(oracles::derivative(f, x, 1e-4)).epsilon(1e-8));
  }

  PotentialSpec ip{PotentialTag::inverse_power, 0.0, 3.0, V0Variant::bounded};
  CHECK(eval_V(ip, 1.0) == doctest::Approx(0.125).epsilon(1e-14));
  auto g = [&](Real x) { return eval_V(ip, x); };
  for (Real x : {-2.0, 0.5, 3.0}) {
    CHECK(eval_V_prime(ip, x) ==
          doctest::Approx(oracles::derivative(g, x, 1e-4)).epsilon(1e-8));
  }
  CHECK_THROWS_AS(eval_V(yuk, 0.0), SingularEvalError);
}

TEST_CASE("derived V0 variants have the right signs for decreasing |V|") {
  PotentialSpec yuk{PotentialTag::yukawa, 0.5, 1.0, V0Variant::bounded};
  for (Real x : {-3.0, -0.5, 0.5, 3.0}) {
    CHECK(eval_V0(yuk, V0Variant::cutoff, x) <= 0.0);
    CHECK(eval_V0(yuk, V0Variant::bounded, x) >= 0.0);
  }
  CHECK(std::isfinite(potential_moment(yuk, make_grid(40.0, 1024))));
  CHECK(potential_moment(yuk, make_grid(40.0, 1024)) > 0.0);
}

TEST_CASE("zero-amplitude convention for the power density") {
  CHECK(abs_pow_2sigma(0.0, 0.25) == 0.0);
  CHECK(abs_pow_2sigma(2.0, 1.0) == doctest::Approx(4.0));
}

TEST_CASE("grid construction and mirror symmetry") {
  CHECK_THROWS_AS(make_grid(-1.0, 64), ConfigError);
  CHECK_THROWS_AS(make_grid(10.0, 100), ConfigError);
  CHECK_THROWS_AS(make_grid(10.0, 8), ConfigError);
  const GridSpec grid = make_grid(10.0, 64);
  for (int j = 0; j < grid.point_count; ++j) {
    CHECK(grid.node(grid.mirror_index(j)) ==
          doctest::Approx(-grid.node(j)).epsilon(1e-14));
    CHECK(grid.node(j) != 0.0);
  }
}

TEST_CASE("cutoff weight geometry and derivative jets") {
  const Real R = 10.0;
  const WeightSpec w = cutoff_weight(R);
  CHECK(eval_phi(w, 2.0, 0) == doctest::Approx(2.0));
  CHECK(eval_phi(w, 2.0, 1) == doctest::Approx(1.0));
  CHECK(eval_phi(w, 12.0, 0) == doctest::Approx(R));
  CHECK(eval_phi(w, 12.0, 1) == doctest::Approx(0.0));
  CHECK(eval_phi(w, -12.0, 0) == doctest::Approx(-R));

  // oddness of the derivative jets
  for (Real x : {1.0, 6.0, 7.3, 9.9}) {
    for (int d = 0; d <= 3; ++d) {
      const Real sign = (d % 2 == 0) ? -1.0 : 1.0;
      CHECK(eval_phi(w, -x, d) ==
            doctest::Approx(sign * eval_phi(w, x, d)).epsilon(1e-12));
    }
  }

  // analytic derivatives against the finite-difference oracle inside the
  // transition band
  for (Real x : {5.6, 6.5, 8.0, 9.4}) {
    for (int d = 1; d <= 3; ++d) {
      auto f = [&](Real y) { return eval_phi(w, y, d - 1); };
      CHECK(eval_phi(w, x, d) ==
            doctest::Approx(oracles::derivative(f, x, 1e-4)).epsilon(1e-5));
    }
  }
}

TEST_CASE("eta is a smooth step") {
  CHECK(eta(-0.5) == 0.0);
  CHECK(eta(1.5) == 1.0);
  CHECK(eta(0.5) == doctest::Approx(0.5));
  for (Real t : {0.1, 0.4, 0.9}) {
    CHECK(eta(t) + eta(1.0 - t) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(eta_jet(t).d1 > 0.0);
  }
}

TEST_CASE("bounded weight is C1 with singular higher derivatives at 0") {
  const WeightSpec w = bounded_weight();
  CHECK(eval_phi(w, 1.0, 0) == doctest::Approx(0.5));
  CHECK(eval_phi(w, -1.0, 0) == doctest::Approx(-0.5));
  CHECK(eval_phi(w, 1.0, 1) == doctest::Approx(0.25));
  CHECK(eval_phi(w, 1.0, 3) == doctest::Approx(6.0 / 16.0));
  CHECK_THROWS_AS(eval_phi(w, 0.0, 2), SingularEvalError);
  CHECK_THROWS_AS(eval_phi(w, 0.0, 3), SingularEvalError);
  CHECK(phi_sup(w) == 1.0);
  CHECK(phi_sup(cutoff_weight(7.0)) == 7.0);
}
