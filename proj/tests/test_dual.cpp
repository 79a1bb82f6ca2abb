#include <doctest.h>

#include "extq/dual.hpp"
#include "support/generators.hpp"

using namespace extq;
using extq::testing::Rng;

TEST_CASE("tau evaluates as the pairing") {
  IntensiveFn<long, Scalar> phi(Scalar(1, 5), {{2L, Scalar(3)}});
  CHECK(tau(dirac(2L))(phi) == Scalar(3));
  CHECK(tau(Dist<long>{})(phi) == Scalar(0));
  CHECK(tau(Dist<long>{})(IntensiveFn<long, Dist<long>>(dirac(1L))).empty());
  Dist<long> p{{0, 2}, {4, -7}};
  CHECK(tau(p)(IntensiveFn<long, Scalar>::constant(Scalar(1))) == total(p));
}

TEST_CASE("recover") {
  CHECK(recover(tau(Dist<long>{})).empty());
  CHECK(recover(tau(Dist<long>{{0, 2}, {1, 3}})) == Dist<long>{{0, 2}, {1, 3}});
  Rng rng(173);
  for (int i = 0; i < testing::kInstances; ++i) {
    Dist<long> p = testing::random_int_dist(rng);
    CHECK(recover(tau(p)) == p);
    CHECK(recover(tau(p)) == tau(p).underlying());
  }
}

TEST_CASE("tau is linear in P and in the test function") {
  Rng rng(179);
  for (int i = 0; i < testing::kInstances; ++i) {
    Dist<long> p = testing::random_int_dist(rng), q = testing::random_int_dist(rng);
    Scalar s = testing::random_scalar(rng);
    auto phi = testing::random_int_fn(rng), psi = testing::random_int_fn(rng);
    CHECK(tau(p + q)(phi) == tau(p)(phi) + tau(q)(phi));
    CHECK(tau(s * p)(phi) == s * tau(p)(phi));
    CHECK(tau(p)(add(phi, psi)) == tau(p)(phi) + tau(p)(psi));
    CHECK(tau(p)([&](long x) { return s * phi(x); }) == s * tau(p)(phi));
    CHECK(recover(tau(p + q)) == recover(tau(p)) + recover(tau(q)));
  }
}

TEST_CASE("scalar indicator functions separate distributions") {
  Rng rng(181);
  for (int i = 0; i < testing::kInstances; ++i) {
    Dist<long> p = testing::random_int_dist(rng), q = testing::random_int_dist(rng);
    if (i % 3 == 0)
      q = p;
    bool all_agree = true;
    for (long x = -20; x <= 20; ++x) {
      IntensiveFn<long, Scalar> indicator(Scalar(0), {{x, Scalar(1)}});
      all_agree = all_agree && tau(p)(indicator) == tau(q)(indicator);
    }
    CHECK(all_agree == (p == q));
  }
}

TEST_CASE("derivative via eta") {
  Rng rng(191);
  for (int i = 0; i < testing::kInstances; ++i) {
    Step h = testing::random_step(rng);
    LineDist p = testing::random_line_dist(rng);
    CHECK(derivative_via_eta(p, h) == derivative(p, h));
    Scalar x = testing::random_point(rng);
    // eta'(x) = (delta_{x+h} - delta_x)/h, negated
    CHECK(derivative_via_eta(dirac(x), h) == h.inverse() * (dirac(x) - dirac(x + h.h())));
  }
  CHECK(derivative_via_eta(LineDist{}, Step(Scalar(1))).empty());
}

TEST_CASE("switch identity through tau") {
  Rng rng(193);
  for (int i = 0; i < testing::kInstances; ++i) {
    Step h = testing::random_step(rng);
    LineDist p = testing::random_line_dist(rng);
    LineFn phi = testing::random_line_fn(rng);
    CHECK(tau(derivative(p, h))(phi) == -tau(p)(fdiff(phi, h)));
  }
}
