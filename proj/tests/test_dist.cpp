#include <doctest.h>

#include "extq/dist.hpp"
#include "extq/intensive.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace extq;
using extq::testing::Rng;
using extq::testing::Terms;

namespace {

long square(long x) { return x * x; }

Dist<Dist<long>> random_nested(Rng &rng) {
  Dist<Dist<long>> pp;
  int n = static_cast<int>(testing::uniform(rng, 0, 5));
  for (int i = 0; i < n; ++i)
    pp.accumulate(testing::random_int_dist(rng, 5), testing::random_scalar(rng));
  return pp;
}

Dist<Dist<Dist<long>>> random_nested3(Rng &rng) {
  Dist<Dist<Dist<long>>> ppp;
  int n = static_cast<int>(testing::uniform(rng, 0, 3));
  for (int i = 0; i < n; ++i)
    ppp.accumulate(random_nested(rng), testing::random_scalar(rng));
  return ppp;
}

} // namespace

TEST_CASE("dirac") {
  Dist<long> d = dirac(3L);
  CHECK(d.size() == 1);
  CHECK(d.coeff(3) == Scalar(1));
  CHECK(total(dirac(-8L)) == Scalar(1));
  IntensiveFn<long, Scalar> phi(Scalar(4), {{3L, Scalar(7, 2)}});
  CHECK(pair(dirac(3L), phi) == Scalar(7, 2));
  CHECK(pair(dirac(2L), phi) == Scalar(4));
}

TEST_CASE("pushforward examples") {
  Dist<long> p{{-1, 2}, {0, 5}, {1, 3}};
  // direct summation: square(-1) = square(1) = 1 collect 2 + 3
  Terms<long> expected{{square(-1), 2}, {square(0), 5}, {square(1), 3}};
  CHECK(testing::same(pushforward(square, p), expected));
  CHECK(pushforward(square, p) == Dist<long>{{0, 5}, {1, 5}});
  CHECK(pushforward([](long x) { return x; }, p) == p);
  CHECK(total(pushforward(square, p)) == total(p));
  // Collisions that cancel are removed.
  Dist<long> q{{-1, 1}, {1, -1}};
  CHECK(pushforward(square, q).empty());
}

TEST_CASE("flatten examples") {
  Dist<Dist<long>> pp{{dirac(0L), 2}, {dirac(1L), 3}};
  CHECK(flatten(pp) == Dist<long>{{0, 2}, {1, 3}});
  Dist<long> p{{4, Scalar(1, 3)}, {9, -2}};
  CHECK(flatten(dirac(p)) == p);
  CHECK(flatten(pushforward([](long x) { return dirac(x); }, p)) == p);
}

TEST_CASE("linear operations") {
  CHECK((Dist<long>{{0, 1}} + Dist<long>{{0, -1}}).empty());
  Dist<long> p{{0, 2}, {1, 1}};
  Dist<long> expected;
  for (const auto &[x, c] : testing::terms_of(p))
    expected.accumulate(x, Scalar(3) * c);
  CHECK(Scalar(3) * p == expected);
  CHECK(Scalar(3) * p == Dist<long>{{0, 6}, {1, 3}});
  CHECK(p + Dist<long>{} == p);
  CHECK((Scalar(0) * p).empty());
  CHECK((p - p).empty());
}

TEST_CASE("total") {
  Dist<long> p{{0, 2}, {1, 3}};
  CHECK(total(p) == testing::oracle_sum(Terms<Scalar>{{Scalar(0), 2}, {Scalar(1), 3}}));
  CHECK(total(p) == Scalar(5));
  CHECK(total(Dist<long>{}) == Scalar(0));
  Rng rng(5);
  for (int i = 0; i < testing::kInstances; ++i) {
    Dist<long> r = testing::random_int_dist(rng);
    CHECK(total(r) == pair(r, IntensiveFn<long, Scalar>::constant(Scalar(1))));
  }
}

TEST_CASE("split and merge") {
  using T = Tagged<long, long>;
  Dist<T> p;
  p.accumulate(T::left(0), 1);
  p.accumulate(T::right(7), 2);
  auto [l, r] = split(p);
  CHECK(l == dirac(0L));
  CHECK(r == Dist<long>{{7, 2}});
  CHECK(merge(l, r) == p);
  CHECK(total(p) == total(l) + total(r));

  Dist<long> q{{3, 4}};
  Dist<T> merged = merge(q, Dist<long>{});
  CHECK(merged == pushforward([](long x) { return T::left(x); }, q));

  Rng rng(17);
  for (int i = 0; i < testing::kInstances; ++i) {
    Dist<long> a = testing::random_int_dist(rng), b = testing::random_int_dist(rng);
    Dist<Scalar> c = testing::random_line_dist(rng);
    auto m = merge(a, c);
    CHECK(m.is_canonical());
    auto [a2, c2] = split(m);
    CHECK(a2 == a);
    CHECK(c2 == c);
    CHECK(merge(a2, c2) == m);
    // additive in each component
    auto m2 = merge(b, c);
    auto [s1, s2] = split(m + m2);
    CHECK(s1 == a + b);
    CHECK(s2 == c + c);
  }
}

TEST_CASE("monad laws on random instances") {
  Rng rng(23);
  auto unit = [](const auto &x) { return dirac(x); };
  for (int i = 0; i < testing::kInstances; ++i) {
    Dist<long> p = testing::random_int_dist(rng);
    CHECK(flatten(dirac(p)) == p);
    CHECK(flatten(pushforward(unit, p)) == p);

    auto ppp = random_nested3(rng);
    auto lhs = flatten(flatten(ppp));
    auto rhs = flatten(pushforward([](const Dist<Dist<long>> &pp) { return flatten(pp); }, ppp));
    CHECK(lhs == rhs);
    CHECK(lhs.is_canonical());
  }
}

TEST_CASE("functoriality") {
  Rng rng(29);
  auto f = [](long x) { return x % 5; };
  auto g = [](long y) { return Scalar(y, 3); };
  for (int i = 0; i < testing::kInstances; ++i) {
    Dist<long> p = testing::random_int_dist(rng);
    CHECK(pushforward([&](long x) { return g(f(x)); }, p) == pushforward(g, pushforward(f, p)));
    CHECK(pushforward([](long x) { return x; }, p) == p);
    CHECK(pushforward(f, p).is_canonical());
  }
}

TEST_CASE("pushforward and flatten are linear") {
  Rng rng(31);
  auto f = [](long x) { return x / 3; };
  for (int i = 0; i < testing::kInstances; ++i) {
    Dist<long> p = testing::random_int_dist(rng), q = testing::random_int_dist(rng);
    Scalar s = testing::random_scalar(rng);
    CHECK(pushforward(f, p + q) == pushforward(f, p) + pushforward(f, q));
    CHECK(pushforward(f, s * p) == s * pushforward(f, p));
    auto pp = random_nested(rng), qq = random_nested(rng);
    CHECK(flatten(pp + qq) == flatten(pp) + flatten(qq));
    CHECK(flatten(s * pp) == s * flatten(pp));
  }
}

TEST_CASE("abelian group and module axioms") {
  Rng rng(37);
  for (int i = 0; i < testing::kInstances; ++i) {
    Dist<long> p = testing::random_int_dist(rng), q = testing::random_int_dist(rng),
               r = testing::random_int_dist(rng);
    Scalar a = testing::random_scalar(rng), b = testing::random_scalar(rng);
    CHECK((p + q) + r == p + (q + r));
    CHECK(p + q == q + p);
    CHECK(p + Dist<long>{} == p);
    CHECK((p + (-p)).empty());
    CHECK(a * (p + q) == a * p + a * q);
    CHECK((a + b) * p == a * p + b * p);
    CHECK((a * b) * p == a * (b * p));
    CHECK(Scalar(1) * p == p);
    for (const auto &d : {p + q, p - q, -r, a * p})
      CHECK(d.is_canonical());
  }
}

TEST_CASE("nested distributions order by canonical form") {
  Dist<long> a{{1, 2}}, b{{1, 2}}, c{{1, 3}};
  CHECK(a == b);
  CHECK(a < c);
  Dist<Dist<long>> pp;
  pp.accumulate(a, 1);
  pp.accumulate(b, 1);
  CHECK(pp.size() == 1);
  CHECK(pp.coeff(a) == Scalar(2));
}
