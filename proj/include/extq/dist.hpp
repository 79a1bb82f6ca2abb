#ifndef EXTQ_DIST_HPP
#define EXTQ_DIST_HPP

// Finitely supported distributions: the free R-module monad T.
//
//   unit      dirac(x)            = 1*delta_x
//   functor   pushforward(f, P)   = sum_x P(x) * delta_{f(x)}
//   multiply  flatten(PP)         = sum_Q PP(Q) * Q
//
// Points only need a strict weak order consistent with equality; it is used
// for canonical storage and deterministic iteration.

#include <compare>
#include <functional>
#include <initializer_list>
#include <map>
#include <type_traits>
#include <utility>
#include <variant>

#include "extq/scalar.hpp"

namespace extq {

template <class X>
class Dist {
public:
  using point_type = X;
  using map_type = std::map<X, Scalar>;
  using const_iterator = typename map_type::const_iterator;

  Dist() = default;

  // Duplicate points are summed, zero coefficients dropped.
  Dist(std::initializer_list<std::pair<X, Scalar>> entries) {
    for (const auto &[x, c] : entries)
      accumulate(x, c);
  }

  static Dist dirac(X x) {
    Dist d;
    d.entries_.emplace(std::move(x), Scalar(1));
    return d;
  }

  // Adds c to the coefficient at x, deleting the entry if it cancels.
  void accumulate(const X &x, const Scalar &c) {
    if (c.is_zero())
      return;
    auto [it, inserted] = entries_.try_emplace(x, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero())
        entries_.erase(it);
    }
  }

  Scalar coeff(const X &x) const {
    auto it = entries_.find(x);
    return it == entries_.end() ? Scalar(0) : it->second;
  }

  const map_type &entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const_iterator begin() const { return entries_.begin(); }
  const_iterator end() const { return entries_.end(); }

  // No zero coefficients and every coefficient in lowest terms.
  bool is_canonical() const {
    for (const auto &[x, c] : entries_)
      if (c.is_zero() || !c.is_canonical())
        return false;
    return true;
  }

  Dist &operator+=(const Dist &o) {
    for (const auto &[x, c] : o.entries_)
      accumulate(x, c);
    return *this;
  }
  Dist &operator-=(const Dist &o) {
    for (const auto &[x, c] : o.entries_)
      accumulate(x, -c);
    return *this;
  }
  Dist &operator*=(const Scalar &s) {
    if (s.is_zero()) {
      entries_.clear();
      return *this;
    }
    for (auto &[x, c] : entries_)
      c *= s;
    return *this;
  }

  Dist operator-() const {
    Dist r = *this;
    for (auto &[x, c] : r.entries_)
      c = -c;
    return r;
  }

  friend Dist operator+(Dist a, const Dist &b) { return a += b; }
  friend Dist operator-(Dist a, const Dist &b) { return a -= b; }
  friend Dist operator*(const Scalar &s, Dist a) { return a *= s; }
  friend Dist operator*(Dist a, const Scalar &s) { return a *= s; }

  friend bool operator==(const Dist &, const Dist &) = default;
  // Lexicographic on the canonical entry list; lets a Dist serve as a point.
  friend auto operator<=>(const Dist &a, const Dist &b) {
    return a.entries_ <=> b.entries_;
  }

private:
  map_type entries_;
};

template <class X>
Dist<X> dirac(X x) {
  return Dist<X>::dirac(std::move(x));
}

template <class X>
Scalar total(const Dist<X> &p) {
  Scalar t;
  for (const auto &[x, c] : p)
    t += c;
  return t;
}

// T(f): image of P along f; coefficients of colliding images are summed.
template <class X, class F>
auto pushforward(F &&f, const Dist<X> &p) {
  using Y = std::decay_t<std::invoke_result_t<F &, const X &>>;
  Dist<Y> out;
  for (const auto &[x, c] : p)
    out.accumulate(std::invoke(f, x), c);
  return out;
}

// mu_X: T(T(X)) -> T(X).
template <class X>
Dist<X> flatten(const Dist<Dist<X>> &pp) {
  Dist<X> out;
  for (const auto &[inner, w] : pp)
    for (const auto &[x, c] : inner)
      out.accumulate(x, w * c);
  return out;
}

// One-point carrier; T(Unit) is identified with the scalars.
struct Unit {
  friend bool operator==(Unit, Unit) { return true; }
  friend std::strong_ordering operator<=>(Unit, Unit) { return std::strong_ordering::equal; }
};

inline Dist<Unit> as_unit_dist(const Scalar &s) {
  Dist<Unit> d;
  d.accumulate(Unit{}, s);
  return d;
}

inline Scalar from_unit_dist(const Dist<Unit> &d) { return d.coeff(Unit{}); }

// A point of the coproduct X + Y.
template <class X, class Y>
class Tagged {
public:
  enum class Side { left, right };

  static Tagged left(X x) { return Tagged(std::variant<X, Y>(std::in_place_index<0>, std::move(x))); }
  static Tagged right(Y y) { return Tagged(std::variant<X, Y>(std::in_place_index<1>, std::move(y))); }

  Side side() const { return v_.index() == 0 ? Side::left : Side::right; }
  bool is_left() const { return v_.index() == 0; }
  const X &left_value() const { return std::get<0>(v_); }
  const Y &right_value() const { return std::get<1>(v_); }

  friend bool operator==(const Tagged &, const Tagged &) = default;
  friend auto operator<=>(const Tagged &a, const Tagged &b) { return a.v_ <=> b.v_; }

private:
  explicit Tagged(std::variant<X, Y> v) : v_(std::move(v)) {}
  std::variant<X, Y> v_;
};

// Phi: T(X+Y) -> T(X) x T(Y), the restrictions to the two summands.
template <class X, class Y>
std::pair<Dist<X>, Dist<Y>> split(const Dist<Tagged<X, Y>> &p) {
  std::pair<Dist<X>, Dist<Y>> out;
  for (const auto &[t, c] : p) {
    if (t.is_left())
      out.first.accumulate(t.left_value(), c);
    else
      out.second.accumulate(t.right_value(), c);
  }
  return out;
}

// Inverse of split.
template <class X, class Y>
Dist<Tagged<X, Y>> merge(const Dist<X> &p1, const Dist<Y> &p2) {
  using T = Tagged<X, Y>;
  return pushforward([](const X &x) { return T::left(x); }, p1) +
         pushforward([](const Y &y) { return T::right(y); }, p2);
}

} // namespace extq

#endif
