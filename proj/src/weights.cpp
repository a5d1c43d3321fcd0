#include "inls/weights.hpp"

#include <cmath>

namespace inls {

void WeightSpec::validate() const {
  if (kind == WeightKind::cutoff_R && R <= 0.0) {
    throw ConfigError("cutoff weight requires R > 0");
  }
}

namespace {

// Value and first three derivatives, composed by chain/quotient rules.
struct Jet {
  Real v, d1, d2, d3;
};

// f(t) = e^{-1/t} for t > 0, with
//   f'   = f / t^2
//   f''  = f (1/t^4 - 2/t^3)
//   f''' = f (1/t^6 - 6/t^5 + 6/t^4)
Jet bump(Real t) {
  if (t <= 0.0) return {0.0, 0.0, 0.0, 0.0};
  const Real f = std::exp(-1.0 / t);
  const Real it = 1.0 / t;
  const Real it2 = it * it, it3 = it2 * it, it4 = it2 * it2;
  return {f, f * it2, f * (it4 - 2.0 * it3),
          f * (it4 * it2 - 6.0 * it4 * it + 6.0 * it4)};
}

Jet operator+(const Jet& a, const Jet& b) {
  return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2, a.d3 + b.d3};
}

// q = a / b via a = q b and Leibniz.
Jet quotient(const Jet& a, const Jet& b) {
  Jet q;
  q.v = a.v / b.v;
  q.d1 = (a.d1 - q.v * b.d1) / b.v;
  q.d2 = (a.d2 - q.v * b.d2 - 2.0 * q.d1 * b.d1) / b.v;
  q.d3 = (a.d3 - q.v * b.d3 - 3.0 * q.d1 * b.d2 - 3.0 * q.d2 * b.d1) / b.v;
  return q;
}

}  // namespace

EtaJet eta_jet(Real t) {
  if (t <= 0.0) return {0.0, 0.0, 0.0, 0.0};
  if (t >= 1.0) return {1.0, 0.0, 0.0, 0.0};
  const Jet f = bump(t);
  Jet g = bump(1.0 - t);
  g.d1 = -g.d1;
  g.d3 = -g.d3;
  const Jet q = quotient(f, f + g);
  return {q.v, q.d1, q.d2, q.d3};
}

Real eta(Real t) { return eta_jet(t).v; }

namespace {

// Cutoff weight on x >= 0; the full weight follows by oddness.
// On R/2 < x < R: phi(x) = R - (R - x) eta(t), t = 2(R - x)/R.
Real cutoff_positive(Real R, Real x, int d) {
  if (x <= 0.5 * R) {
    if (d == 0) return x;
    if (d == 1) return 1.0;
    return 0.0;
  }
  if (x >= R) return (d == 0) ? R : 0.0;
  const Real t = 2.0 * (R - x) / R;
  const EtaJet e = eta_jet(t);
  switch (d) {
    case 0:
      return R - 0.5 * R * t * e.v;
    case 1:
      return e.v + t * e.d1;
    case 2:
      return -(2.0 / R) * (2.0 * e.d1 + t * e.d2);
    case 3:
      return (4.0 / (R * R)) * (3.0 * e.d2 + t * e.d3);
  }
  return 0.0;
}

}  // namespace

Real eval_phi(const WeightSpec& w, Real x, int d) {
  if (d < 0 || d > 3) throw ConfigError("eval_phi: derivative order in 0..3");
  w.validate();
  switch (w.kind) {
    case WeightKind::cutoff_R: {
      if (x >= 0.0) return cutoff_positive(w.R, x, d);
      // phi odd: phi^{(d)}(-x) = (-1)^{d+1} phi^{(d)}(x)
      const Real v = cutoff_positive(w.R, -x, d);
      return (d % 2 == 0) ? -v : v;
    }
    case WeightKind::bounded: {
      const Real ax = std::abs(x);
      const Real one = 1.0 + ax;
      switch (d) {
        case 0:
          return x / one;
        case 1:
          return 1.0 / (one * one);
        case 2:
          if (x == 0.0) {
            throw SingularEvalError(
                "bounded weight: second derivative undefined at x = 0");
          }
          return -2.0 * (x > 0.0 ? 1.0 : -1.0) / (one * one * one);
        case 3:
          if (x == 0.0) {
            throw SingularEvalError(
                "bounded weight: third derivative undefined at x = 0");
          }
          return 6.0 / (one * one * one * one);
      }
      return 0.0;
    }
    case WeightKind::psi:
    case WeightKind::alpha: {
      const Real one = 1.0 + std::abs(x);
      if (d == 0) return std::pow(one, -4.0);
      if (d == 1) {
        if (x == 0.0) {
          throw SingularEvalError("psi/alpha derivative undefined at x = 0");
        }
        return -4.0 * (x > 0.0 ? 1.0 : -1.0) * std::pow(one, -5.0);
      }
      throw ConfigError("psi/alpha weights support derivative orders 0 and 1");
    }
  }
  return 0.0;
}

Real phi_sup(const WeightSpec& w) {
  return (w.kind == WeightKind::cutoff_R) ? w.R : 1.0;
}

}  // namespace inls
