// Average-gate-fidelity ceilings under rank constraints, and the seeded
// random search over local gates used to probe them empirically.
#pragma once

#include <cmath>
#include <stdexcept>

#include "detgeo/matrix.hpp"
#include "detgeo/random.hpp"

namespace detgeo {

struct FidelityBound {
  double delta = 0.0;  // squared Frobenius gap (phase-minimized)
  int dim = 4;
  double bound = 1.0;
};

// F_avg(U,V) <= ((d - delta/2)^2 + d) / (d(d+1)) whenever every candidate V
// satisfies min_phi ||U - e^{i phi} V||_F^2 >= delta.
inline FidelityBound avg_fidelity_bound(double delta, int dim) {
  if (dim < 2) throw std::invalid_argument("avg_fidelity_bound: dim must be >= 2");
  if (delta < 0.0 || delta > 2.0 * dim)
    throw std::invalid_argument("avg_fidelity_bound: delta must be in [0, 2*dim]");
  const double d = static_cast<double>(dim);
  const double t = d - delta / 2.0;
  return {delta, dim, (t * t + d) / (d * (d + 1.0))};
}

inline void require_unitary(const Mat4& u, const char* what) {
  if (!u.is_finite() || unitarity_defect(u) > 1e-8)
    throw std::domain_error(std::string(what) + ": input is not unitary");
}

// F_avg = (|Tr(U^dag V)|^2 + d) / (d(d+1)) for d = 4; invariant under a
// global phase on either argument.
inline double avg_gate_fidelity(const Mat4& u, const Mat4& v) {
  require_unitary(u, "avg_gate_fidelity");
  require_unitary(v, "avg_gate_fidelity");
  const double t = std::abs((u.adjoint() * v).trace());
  return (t * t + 4.0) / 20.0;
}

// min over global phase of ||u - e^{i phi} v||_F^2 = 2d - 2|Tr(u^dag v)|.
inline double min_phase_frobenius_gap(const Mat4& u, const Mat4& v) {
  require_unitary(u, "min_phase_frobenius_gap");
  require_unitary(v, "min_phase_frobenius_gap");
  return 8.0 - 2.0 * std::abs((u.adjoint() * v).trace());
}

struct LocalSearchResult {
  double best_fidelity = 0.0;
  Mat2 k1, k2;
};

// Random search over product gates K1 (x) K2 against a fixed target, followed
// by a multiplicative-perturbation polish around the best sample. Reports the
// achieved maximum; makes no claim that the true supremum is attained.
inline LocalSearchResult best_local_approximation(const Mat4& target,
                                                  int samples, Rng::result_type seed,
                                                  bool polish = true) {
  require_unitary(target, "best_local_approximation");
  Rng rng(seed);
  LocalSearchResult best;
  for (int i = 0; i < samples; ++i) {
    const Mat2 k1 = random_su2(rng), k2 = random_su2(rng);
    const double f = avg_gate_fidelity(target, kron(k1, k2));
    if (f > best.best_fidelity) best = {f, k1, k2};
  }
  if (!polish) return best;

  std::normal_distribution<double> n;
  auto nudge = [&](const Mat2& k, double scale) {
    // k * exp(-i scale (ax X + ay Y + az Z)), first order is enough here.
    const double ax = n(rng) * scale, ay = n(rng) * scale, az = n(rng) * scale;
    const double theta = std::sqrt(ax * ax + ay * ay + az * az);
    const double c = std::cos(theta), s = theta > 0 ? std::sin(theta) / theta : 1.0;
    Mat2 g;
    g(0, 0) = cplx{c, -s * az};
    g(0, 1) = cplx{-s * ay, -s * ax};
    g(1, 0) = cplx{s * ay, -s * ax};
    g(1, 1) = cplx{c, s * az};
    Mat2 r;
    for (int i2 = 0; i2 < 2; ++i2)
      for (int j = 0; j < 2; ++j)
        r(i2, j) = k(i2, 0) * g(0, j) + k(i2, 1) * g(1, j);
    return r;
  };
  for (double scale = 0.2; scale > 1e-10; scale *= 0.5) {
    for (int trial = 0; trial < 64; ++trial) {
      const Mat2 k1 = nudge(best.k1, scale), k2 = nudge(best.k2, scale);
      const double f = avg_gate_fidelity(target, kron(k1, k2));
      if (f > best.best_fidelity) best = {f, k1, k2};
    }
  }
  return best;
}

}  // namespace detgeo
