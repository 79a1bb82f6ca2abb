#ifndef EXTQ_DUAL_HPP
#define EXTQ_DUAL_HPP

// Double-dual view of an extensive quantity: P as the functional
// phi |-> <P, phi> on module-valued test functions, and recovery of P from
// its value on the single test function eta_X : x |-> delta_x.

#include <utility>

#include "extq/calculus.hpp"
#include "extq/intensive.hpp"

namespace extq {

template <class X>
class Functional {
public:
  explicit Functional(Dist<X> underlying) : underlying_(std::move(underlying)) {}

  template <class Phi, class V = std::decay_t<std::invoke_result_t<const Phi &, const X &>>,
            ModuleOps<V> M = default_module_t<V>>
  V operator()(const Phi &phi, const M &m = {}) const {
    return pair(underlying_, phi, m);
  }

  const Dist<X> &underlying() const { return underlying_; }

private:
  Dist<X> underlying_;
};

template <class X>
Functional<X> tau(Dist<X> p) {
  return Functional<X>(std::move(p));
}

// Evaluation at eta_X with values in the module T(X).
template <class X>
Dist<X> recover(const Functional<X> &f) {
  return f([](const X &x) { return dirac(x); }, DistModule<X>{});
}

// P' = -<P, eta_R'>, computed without calling derivative().
inline LineDist derivative_via_eta(const LineDist &p, const Step &step) {
  auto eta_prime = difference_quotient(eta_line(), step);
  return tau(p)([&eta_prime](const Scalar &x) { return -eta_prime(x); }, DistModule<Scalar>{});
}

} // namespace extq

#endif
