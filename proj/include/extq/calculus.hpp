#ifndef EXTQ_CALCULUS_HPP
#define EXTQ_CALCULUS_HPP

// Finite-difference calculus of extensive quantities on the line R, for a
// single invertible step h (D = {h}). The derivative of a distribution is
// the unique P' with
//
//   h * P' = P - translate(h, P),
//
// and the derivative of a function is the difference quotient
// f'(x) = (f(x+h) - f(x)) / h.

#include <set>
#include <stdexcept>
#include <string>

#include "extq/dist.hpp"
#include "extq/intensive.hpp"
#include "extq/tensor.hpp"

namespace extq {

using LineDist = Dist<Scalar>;
using LineFn = IntensiveFn<Scalar, Scalar>;

class NoPrimitive : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Raised by interval() when (b - a) / h is not an integer.
class NotOnGrid : public NoPrimitive {
public:
  using NoPrimitive::NoPrimitive;
};

// The class of x in R / hZ. Points x, y share a coset iff (x - y)/h is an
// integer; the representative lies in [0, |h|).
struct GridCoset {
  Scalar representative;
  Scalar step;

  static GridCoset of(const Scalar &x, const Step &step);
  // k with x = representative + k*h.
  mpz_class index_of(const Scalar &x) const;
  Scalar point_at(const mpz_class &k) const;

  friend bool operator==(const GridCoset &, const GridCoset &) = default;
  friend auto operator<=>(const GridCoset &, const GridCoset &) = default;
};

// Pushforward along x |-> x + u.
LineDist translate(const Scalar &u, const LineDist &p);

LineDist derivative(const LineDist &p, const Step &step);

// (1/h) * (P - flow_*(P)) for an arbitrary one-step flow on X.
template <class X, class Flow>
Dist<X> derivative_along(Flow &&flow, const Dist<X> &p, const Step &step) {
  return step.inverse() * (p - pushforward(flow, p));
}

// E(P) = sum_x P(x) * x.
Scalar expectation(const LineDist &p);

// The unique finitely supported P with derivative(P) = Q. Throws NoPrimitive
// unless every grid coset of Q has total zero.
LineDist primitive(const LineDist &q, const Step &step);

// [a, b], the primitive of delta_a - delta_b. Throws NotOnGrid when b - a is
// not a multiple of h.
LineDist interval(const Scalar &a, const Scalar &b, const Step &step);

// n-fold convolution power, n >= 1.
LineDist conv_power(const LineDist &p, unsigned n);

// Difference quotient of a callable f : R -> V, as a callable.
template <class F, class V = std::decay_t<std::invoke_result_t<const F &, const Scalar &>>,
          ModuleOps<V> M = default_module_t<V>>
auto difference_quotient(F f, const Step &step, M m = {}) {
  return [f = std::move(f), step, m](const Scalar &x) -> V {
    return m.scale(step.inverse(), m.add(std::invoke(f, x + step.h()), m.negate(std::invoke(f, x))));
  };
}

// Difference quotient of a table-plus-default function. The default of the
// result is zero; exceptions can only occur at e and e - h for exception
// points e of phi.
template <class V, ModuleOps<V> M = default_module_t<V>>
IntensiveFn<Scalar, V> fdiff(const IntensiveFn<Scalar, V> &phi, const Step &step, const M &m = {}) {
  IntensiveFn<Scalar, V> out(m.zero());
  std::set<Scalar> candidates;
  for (const auto &kv : phi.exceptions()) {
    candidates.insert(kv.first);
    candidates.insert(kv.first - step.h());
  }
  for (const Scalar &x : candidates)
    out.set(x, m.scale(step.inverse(), m.add(phi(x + step.h()), m.negate(phi(x)))));
  return out;
}

// The unit eta_R : x |-> delta_x as a Dist-valued test function.
inline auto eta_line() {
  return [](const Scalar &x) { return dirac(x); };
}

} // namespace extq

#endif
