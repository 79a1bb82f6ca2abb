#ifndef EXTQ_INTENSIVE_HPP
#define EXTQ_INTENSIVE_HPP

// Intensive quantities (test functions) and their pairing with extensive
// quantities.
//
// A codomain V of a test function must be an R-module; the structure is
// supplied by a stateless "module ops" object (zero, add, negate, scale).
// In the free-module model the T-algebra structure map is exactly "evaluate
// the linear combination", which is what pair() does with those operations.

#include <concepts>
#include <functional>
#include <map>
#include <set>
#include <type_traits>
#include <utility>

#include "extq/dist.hpp"

namespace extq {

template <class M, class V>
concept ModuleOps = requires(const M &m, const V &a, const V &b, const Scalar &s) {
  { m.zero() } -> std::convertible_to<V>;
  { m.add(a, b) } -> std::convertible_to<V>;
  { m.negate(a) } -> std::convertible_to<V>;
  { m.scale(s, a) } -> std::convertible_to<V>;
};

struct ScalarModule {
  Scalar zero() const { return Scalar(0); }
  Scalar add(const Scalar &a, const Scalar &b) const { return a + b; }
  Scalar negate(const Scalar &a) const { return -a; }
  Scalar scale(const Scalar &s, const Scalar &a) const { return s * a; }
};

template <class Y>
struct DistModule {
  Dist<Y> zero() const { return {}; }
  Dist<Y> add(const Dist<Y> &a, const Dist<Y> &b) const { return a + b; }
  Dist<Y> negate(const Dist<Y> &a) const { return -a; }
  Dist<Y> scale(const Scalar &s, const Dist<Y> &a) const { return s * a; }
};

template <class V>
struct default_module;
template <>
struct default_module<Scalar> {
  using type = ScalarModule;
};
template <class Y>
struct default_module<Dist<Y>> {
  using type = DistModule<Y>;
};
template <class V>
using default_module_t = typename default_module<V>::type;

// Total function X -> V stored as a finite exception table over a default.
// Exceptions equal to the default are never stored.
template <class X, class V>
class IntensiveFn {
public:
  using point_type = X;
  using value_type = V;

  IntensiveFn() = default;
  explicit IntensiveFn(V dflt) : default_(std::move(dflt)) {}
  IntensiveFn(V dflt, std::initializer_list<std::pair<X, V>> exceptions)
      : default_(std::move(dflt)) {
    for (const auto &[x, v] : exceptions)
      set(x, v);
  }

  static IntensiveFn constant(V v) { return IntensiveFn(std::move(v)); }

  void set(const X &x, V v) {
    if (v == default_)
      exceptions_.erase(x);
    else
      exceptions_.insert_or_assign(x, std::move(v));
  }

  const V &operator()(const X &x) const {
    auto it = exceptions_.find(x);
    return it == exceptions_.end() ? default_ : it->second;
  }

  const V &default_value() const { return default_; }
  const std::map<X, V> &exceptions() const { return exceptions_; }

  bool is_canonical() const {
    for (const auto &[x, v] : exceptions_)
      if (v == default_)
        return false;
    return true;
  }

  friend bool operator==(const IntensiveFn &, const IntensiveFn &) = default;

private:
  std::map<X, V> exceptions_;
  V default_{};
};

namespace detail {

template <class X, class V1, class V2, class Op>
auto combine_pointwise(const IntensiveFn<X, V1> &a, const IntensiveFn<X, V2> &b, Op op) {
  using R = std::decay_t<std::invoke_result_t<Op &, const V1 &, const V2 &>>;
  IntensiveFn<X, R> out(op(a.default_value(), b.default_value()));
  std::set<X> keys;
  for (const auto &kv : a.exceptions())
    keys.insert(kv.first);
  for (const auto &kv : b.exceptions())
    keys.insert(kv.first);
  for (const X &x : keys)
    out.set(x, op(a(x), b(x)));
  return out;
}

} // namespace detail

// Pointwise sum of two tables.
template <class X, class V, ModuleOps<V> M = default_module_t<V>>
IntensiveFn<X, V> add(const IntensiveFn<X, V> &a, const IntensiveFn<X, V> &b, const M &m = {}) {
  return detail::combine_pointwise(a, b, [&m](const V &u, const V &v) { return m.add(u, v); });
}

// Pointwise product of scalar-valued intensive quantities.
template <class X>
IntensiveFn<X, Scalar> multiply(const IntensiveFn<X, Scalar> &a, const IntensiveFn<X, Scalar> &b) {
  return detail::combine_pointwise(a, b, [](const Scalar &u, const Scalar &v) { return u * v; });
}

// <P, phi> = sum_x P(x) * phi(x), evaluated in the module m. phi may be an
// IntensiveFn or any callable X -> V; only the support of P is visited.
template <class X, class Phi,
          class V = std::decay_t<std::invoke_result_t<const Phi &, const X &>>,
          ModuleOps<V> M = default_module_t<V>>
V pair(const Dist<X> &p, const Phi &phi, const M &m = {}) {
  V acc = m.zero();
  for (const auto &[x, c] : p)
    acc = m.add(acc, m.scale(c, std::invoke(phi, x)));
  return acc;
}

// P |- phi: reweight P pointwise by the scalar function phi.
template <class X, class Phi>
Dist<X> act(const Dist<X> &p, const Phi &phi) {
  Dist<X> out;
  for (const auto &[x, c] : p)
    out.accumulate(x, c * Scalar(std::invoke(phi, x)));
  return out;
}

// phi -| psi: x |-> phi(x) * psi(x), the pointwise action of scalar functions
// on module-valued functions.
template <class X, class V, ModuleOps<V> M = default_module_t<V>>
IntensiveFn<X, V> pointwise_act(const IntensiveFn<X, Scalar> &phi, const IntensiveFn<X, V> &psi,
                                const M &m = {}) {
  return detail::combine_pointwise(
      phi, psi, [&m](const Scalar &s, const V &v) { return m.scale(s, v); });
}

// f^*(psi) = psi o f. The result is a callable; exceptions of psi have no
// finite preimage description in general, so composition is lazy.
template <class F, class Psi>
auto pullback(F f, Psi psi) {
  return [f = std::move(f), psi = std::move(psi)](const auto &x) {
    return std::invoke(psi, std::invoke(f, x));
  };
}

} // namespace extq

#endif
