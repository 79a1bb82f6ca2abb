#include "extq/calculus.hpp"

#include <map>
#include <vector>

namespace extq {

GridCoset GridCoset::of(const Scalar &x, const Step &step) {
  Scalar width = step.h().abs();
  Scalar q = x / width;
  Scalar rep = x - Scalar(q.floor(), mpz_class(1)) * width;
  return GridCoset{rep, step.h()};
}

mpz_class GridCoset::index_of(const Scalar &x) const {
  Scalar k = (x - representative) / step;
  return k.numerator();
}

Scalar GridCoset::point_at(const mpz_class &k) const {
  return representative + Scalar(k, mpz_class(1)) * step;
}

LineDist translate(const Scalar &u, const LineDist &p) {
  return pushforward([&u](const Scalar &x) { return x + u; }, p);
}

LineDist derivative(const LineDist &p, const Step &step) {
  return step.inverse() * (p - translate(step.h(), p));
}

Scalar expectation(const LineDist &p) {
  Scalar e;
  for (const auto &[x, c] : p)
    e += c * x;
  return e;
}

LineDist primitive(const LineDist &q, const Step &step) {
  // P(x) - P(x - h) = h * Q(x), so P(x) = h * sum_{k >= 0} Q(x - k h)
  // within each coset.
  std::map<GridCoset, std::map<mpz_class, Scalar>> cosets;
  for (const auto &[x, c] : q) {
    GridCoset g = GridCoset::of(x, step);
    cosets[g].emplace(g.index_of(x), c);
  }
  LineDist out;
  for (const auto &[g, column] : cosets) {
    Scalar running;
    auto it = column.begin();
    mpz_class k = it->first;
    const mpz_class last = column.rbegin()->first;
    for (; k <= last; ++k) {
      if (it != column.end() && it->first == k) {
        running += it->second;
        ++it;
      }
      out.accumulate(g.point_at(k), step.h() * running);
    }
    if (!running.is_zero())
      throw NoPrimitive("no finitely supported primitive: coset " + g.representative.str() +
                        " + " + step.h().str() + "Z has total " + running.str());
  }
  return out;
}

LineDist interval(const Scalar &a, const Scalar &b, const Step &step) {
  if (!((b - a) / step.h()).is_integer())
    throw NotOnGrid("interval endpoints " + a.str() + ", " + b.str() +
                    " are not on a common grid of step " + step.h().str());
  return primitive(dirac(a) - dirac(b), step);
}

LineDist conv_power(const LineDist &p, unsigned n) {
  if (n == 0)
    throw std::invalid_argument("convolution power must be at least 1");
  LineDist out = p;
  for (unsigned k = 1; k < n; ++k)
    out = convolve(out, p);
  return out;
}

} // namespace extq
