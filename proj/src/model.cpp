#include "inls/model.hpp"

#include <cmath>

namespace inls {

void ModelSpec::validate() const {
  if (sigma <= 0.0) throw ConfigError("sigma must be positive");
  if (b <= 0.0 || b >= 1.0) throw ConfigError("b must lie in (0,1)");
  if (mu < 0.0) throw ConfigError("mu must be nonnegative");
  if (K_family.sign != 1 && K_family.sign != -1) {
    throw ConfigError("K family sign must be +1 or -1");
  }
  if (K_family.tag == KFamilyTag::K1_pure && K_family.sign != 1) {
    throw ConfigError("K1 family requires sign +1");
  }
  if (K_family.epsilon_K < 0.0) throw ConfigError("epsilon_K must be >= 0");
}

namespace {

// Tail factor tau(r) with K(x) = s * r^{-b} * tau(r), r = |x| (pure) or
// sqrt(x^2 + eps^2) (mollified).
Real tail(KFamilyTag tag, Real b, Real r) {
  switch (tag) {
    case KFamilyTag::none:
    case KFamilyTag::K1_pure:
    case KFamilyTag::K2_pure:
      return 1.0;
    case KFamilyTag::K3_decay:
      return std::pow(1.0 + r, -2.0 + b);
    case KFamilyTag::K4_decay:
      return std::pow(1.0 + r, -3.0);
  }
  return 1.0;
}

Real tail_prime(KFamilyTag tag, Real b, Real r) {
  switch (tag) {
    case KFamilyTag::none:
    case KFamilyTag::K1_pure:
    case KFamilyTag::K2_pure:
      return 0.0;
    case KFamilyTag::K3_decay:
      return (-2.0 + b) * std::pow(1.0 + r, -3.0 + b);
    case KFamilyTag::K4_decay:
      return -3.0 * std::pow(1.0 + r, -4.0);
  }
  return 0.0;
}

Real radial(const CoefficientFamily& fam, Real x) {
  if (fam.epsilon_K > 0.0) return std::hypot(x, fam.epsilon_K);
  return std::abs(x);
}

}  // namespace

Real eval_K(const ModelSpec& model, Real x) {
  const auto& fam = model.K_family;
  if (fam.tag == KFamilyTag::none) return 0.0;
  if (x == 0.0 && fam.epsilon_K == 0.0) {
    throw SingularEvalError("eval_K: x = 0 with a pure (non-mollified) family");
  }
  const Real r = radial(fam, x);
  return fam.sign * std::pow(r, -model.b) * tail(fam.tag, model.b, r);
}

Real eval_K_prime(const ModelSpec& model, Real x) {
  const auto& fam = model.K_family;
  if (fam.tag == KFamilyTag::none) return 0.0;
  if (x == 0.0 && fam.epsilon_K == 0.0) {
    throw SingularEvalError(
        "eval_K_prime: x = 0 with a pure (non-mollified) family");
  }
  const Real r = radial(fam, x);
  const Real b = model.b;
  // d/dr [ r^{-b} tau(r) ], then dr/dx = x/r.
  const Real df_dr = -b * std::pow(r, -b - 1.0) * tail(fam.tag, b, r) +
                     std::pow(r, -b) * tail_prime(fam.tag, b, r);
  const Real dr_dx = (fam.epsilon_K > 0.0) ? x / r : (x > 0.0 ? 1.0 : -1.0);
  return fam.sign * df_dr * dr_dx;
}

Real eval_V(const PotentialSpec& pot, Real x) {
  const Real ax = std::abs(x);
  switch (pot.tag) {
    case PotentialTag::zero:
      return 0.0;
    case PotentialTag::inverse_power:
      if (ax == 0.0 && pot.m > 0.0) {
        throw SingularEvalError("eval_V: x = 0 with m > 0");
      }
      return (pot.m == 0.0 ? 1.0 : std::pow(ax, -pot.m)) *
             std::pow(1.0 + ax, -pot.n);
    case PotentialTag::yukawa:
      if (ax == 0.0) throw SingularEvalError("eval_V: x = 0 for Yukawa");
      return std::pow(ax, -pot.m) * std::exp(-pot.n * ax);
  }
  return 0.0;
}

Real eval_V_prime(const PotentialSpec& pot, Real x) {
  const Real ax = std::abs(x);
  const Real sgn = (x > 0.0) ? 1.0 : -1.0;
  switch (pot.tag) {
    case PotentialTag::zero:
      return 0.0;
    case PotentialTag::inverse_power: {
      if (ax == 0.0) throw SingularEvalError("eval_V_prime: x = 0");
      const Real p = (pot.m == 0.0 ? 1.0 : std::pow(ax, -pot.m));
      const Real q = std::pow(1.0 + ax, -pot.n);
      return sgn * (-pot.m * p / ax * q - pot.n * p * q / (1.0 + ax));
    }
    case PotentialTag::yukawa: {
      if (ax == 0.0) throw SingularEvalError("eval_V_prime: x = 0");
      const Real v = std::pow(ax, -pot.m) * std::exp(-pot.n * ax);
      return sgn * v * (-pot.m / ax - pot.n);
    }
  }
  return 0.0;
}

Real eval_V0(const PotentialSpec& pot, V0Variant variant, Real x) {
  if (pot.tag == PotentialTag::zero) return 0.0;
  const Real vp = eval_V_prime(pot, x);
  switch (variant) {
    case V0Variant::cutoff:
      return -std::abs(x * vp);
    case V0Variant::bounded:
      return -x * (1.0 + std::abs(x)) * vp;
  }
  return 0.0;
}

Array sample_K(const ModelSpec& model, const Array& x) {
  Array out(x.size());
  for (Eigen::Index j = 0; j < x.size(); ++j) out[j] = eval_K(model, x[j]);
  return out;
}

Array sample_K_prime(const ModelSpec& model, const Array& x) {
  Array out(x.size());
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    out[j] = eval_K_prime(model, x[j]);
  }
  return out;
}

Array sample_V(const PotentialSpec& pot, const Array& x) {
  Array out(x.size());
  for (Eigen::Index j = 0; j < x.size(); ++j) out[j] = eval_V(pot, x[j]);
  return out;
}

Array sample_V0(const PotentialSpec& pot, V0Variant variant, const Array& x) {
  Array out(x.size());
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    out[j] = eval_V0(pot, variant, x[j]);
  }
  return out;
}

Real potential_moment(const PotentialSpec& pot, const GridSpec& grid) {
  if (pot.tag == PotentialTag::zero) return 0.0;
  const Array x = grid.nodes();
  Real sum = 0.0;
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    const Real ax = std::abs(x[j]);
    sum += std::abs(x[j] * eval_V_prime(pot, x[j])) * (1.0 + ax) * (1.0 + ax);
  }
  return grid.h() * sum;
}

bool satisfies_K1(const ModelSpec& model, const GridSpec& grid) {
  const Array x = grid.nodes();
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    if (eval_K(model, x[j]) <= 0.0) return false;
    if (x[j] * eval_K_prime(model, x[j]) > 0.0) return false;
  }
  return true;
}

}  // namespace inls
