// Seeded sampling helpers: Haar-random single-qubit unitaries and uniform
// Weyl-chamber points.
#pragma once

#include <algorithm>
#include <cmath>
#include <random>

#include "detgeo/matrix.hpp"
#include "detgeo/weyl.hpp"

namespace detgeo {

using Rng = std::mt19937_64;

// Haar-distributed SU(2) element via a Ginibre column and Gram-Schmidt.
inline Mat2 random_su2(Rng& rng) {
  std::normal_distribution<double> n;
  cplx a{n(rng), n(rng)}, b{n(rng), n(rng)};
  const double norm = std::sqrt(std::norm(a) + std::norm(b));
  a /= norm;
  b /= norm;
  // Columns (a,b) and (-conj(b), conj(a)) form a special unitary.
  Mat2 k;
  k(0, 0) = a;
  k(1, 0) = b;
  k(0, 1) = -std::conj(b);
  k(1, 1) = std::conj(a);
  return k;
}

inline Mat4 random_local_gate(Rng& rng) {
  return kron(random_su2(rng), random_su2(rng));
}

// Uniform over the chamber: three iid uniforms on [0, pi/2], sorted
// descending.
inline WeylPoint random_chamber_point(Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, kHalfPi);
  double v[3] = {u(rng), u(rng), u(rng)};
  std::sort(v, v + 3, std::greater<>());
  return {v[0], v[1], v[2]};
}

}  // namespace detgeo
