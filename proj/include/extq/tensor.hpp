#ifndef EXTQ_TENSOR_HPP
#define EXTQ_TENSOR_HPP

// Monoidal structure of T: the two tensor composites, convolution along a
// map, and the scalar multiplication of R = T(1).

#include <functional>
#include <type_traits>
#include <utility>

#include "extq/dist.hpp"

namespace extq {

// P (x) Q, built as the nested linear extension that keeps Q outermost:
// extend y |-> P (x) delta_y over Q, then flatten.
template <class X, class Y>
Dist<std::pair<X, Y>> tensor(const Dist<X> &p, const Dist<Y> &q) {
  using XY = std::pair<X, Y>;
  auto column = [&p](const Y &y) {
    return pushforward([&y](const X &x) { return XY(x, y); }, p);
  };
  return flatten(pushforward(column, q));
}

// The opposite composite, P outermost: extend x |-> delta_x (x) Q over P.
template <class X, class Y>
Dist<std::pair<X, Y>> tensor_tilde(const Dist<X> &p, const Dist<Y> &q) {
  using XY = std::pair<X, Y>;
  auto row = [&q](const X &x) {
    return pushforward([&x](const Y &y) { return XY(x, y); }, q);
  };
  return flatten(pushforward(row, p));
}

// Convolution of P and Q along a : X x Y -> Z, i.e. a_*(P (x) Q).
template <class X, class Y, class A>
auto convolve_along(A &&a, const Dist<X> &p, const Dist<Y> &q) {
  return pushforward(
      [&a](const std::pair<X, Y> &xy) { return std::invoke(a, xy.first, xy.second); },
      tensor(p, q));
}

// Convolution along addition on the line. Accumulates directly into the
// output instead of materializing the product support.
inline Dist<Scalar> convolve(const Dist<Scalar> &p, const Dist<Scalar> &q) {
  Dist<Scalar> out;
  for (const auto &[x, a] : p)
    for (const auto &[y, b] : q)
      out.accumulate(x + y, a * b);
  return out;
}

// Multiplication of R = T(1): convolution along 1 x 1 -> 1.
inline Dist<Unit> scalar_mul_R(const Dist<Unit> &lambda, const Dist<Unit> &rho) {
  return convolve_along([](Unit, Unit) { return Unit{}; }, lambda, rho);
}

// Action of R on T(X) through T(1) (x) T(X) -> T(1 x X) = T(X).
template <class X>
Dist<X> scalar_act(const Scalar &lambda, const Dist<X> &p) {
  return convolve_along([](Unit, const X &x) { return x; }, as_unit_dist(lambda), p);
}

} // namespace extq

#endif
