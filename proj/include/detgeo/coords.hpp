// Determinantal geometry: distances d_k to the rank-k varieties, the
// coordinates (x,y,z) = (d1^2,d2^2,d3^2), region boundaries and classifiers,
// and the inverse map back to Weyl coordinates.
#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string_view>
#include <utility>

#include "detgeo/matrix.hpp"
#include "detgeo/weyl.hpp"

namespace detgeo {

struct DetCoords {
  double x = 0.0;  // d1^2
  double y = 0.0;  // d2^2
  double z = 0.0;  // d3^2
};

// a = cos c1 cos c2, b = cos c1 cos c3, c = cos c2 cos c3.
// In-chamber: 0 <= a <= b <= c <= 1.
struct AbcProducts {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

// d_k^2 = sum of the squared Schmidt coefficients with index >= k
// (Eckart-Young residual of the realignment at rank k).
inline double dk_distance_sq(const SchmidtSpectrum& s, int k) {
  if (k < 1 || k > 3)
    throw std::invalid_argument("dk_distance_sq: k must be in 1..3");
  double acc = 0.0;
  for (int j = k; j < 4; ++j) acc += s[j] * s[j];
  return acc;
}

// Rank-1 distance under the Schatten p-norm: (s1^p + s2^p + s3^p)^(1/p);
// p = infinity gives s1.
inline double rank1_schatten_distance(const SchmidtSpectrum& s, double p) {
  if (!(p >= 1.0))
    throw std::invalid_argument("rank1_schatten_distance: p must be >= 1");
  SingularValues4 tail{s[1], s[2], s[3], 0.0};
  return schatten_norm(tail, p);
}

inline AbcProducts abc_products(const WeylPoint& w) {
  const double k1 = std::cos(w.c1), k2 = std::cos(w.c2), k3 = std::cos(w.c3);
  return {k1 * k2, k1 * k3, k2 * k3};
}

// x = 3 - a - b - c, y = 2 - 2c, z = 1 + a - b - c.
inline DetCoords det_coords(const WeylPoint& w, double tol = kDefaultTol) {
  require_in_chamber(w, tol);
  const AbcProducts p = abc_products(w);
  return {3.0 - p.a - p.b - p.c, 2.0 - 2.0 * p.c, 1.0 + p.a - p.b - p.c};
}

// Invert the spectrum relations s0^2 = 1+a+b+c, s1^2 = 1-a-b+c,
// s2^2 = 1-a+b-c, s3^2 = 1+a-b-c. Values near the [0,1] boundary are
// clamped; values beyond tol outside are rejected as non-chamber spectra.
inline AbcProducts abc_from_spectrum(const SchmidtSpectrum& s,
                                     double tol = kDefaultTol) {
  auto solve = [&](double sum_sq) {
    double v = sum_sq / 2.0 - 1.0;
    if (v < -tol || v > 1.0 + tol)
      throw std::domain_error("abc_from_spectrum: not a chamber spectrum");
    return std::clamp(v, 0.0, 1.0);
  };
  return {solve(s[0] * s[0] + s[3] * s[3]), solve(s[0] * s[0] + s[2] * s[2]),
          solve(s[0] * s[0] + s[1] * s[1])};
}

// Result of the inverse map. Away from the face c1 = pi/2 the Weyl point is
// unique. On that face a = b = 0 and only the product cos(c2)cos(c3)
// survives, so the preimage is ambiguous and only c_product is meaningful.
struct WeylExtraction {
  bool face_ambiguous = false;
  WeylPoint point;       // valid when !face_ambiguous
  double c_product = 0;  // cos(c2)cos(c3); always filled

  // On the singular face, the conventional representative with c3 = 0.
  // A labeled choice, not the unique preimage.
  WeylPoint face_representative() const {
    return {kHalfPi, std::acos(std::clamp(c_product, 0.0, 1.0)), 0.0};
  }
};

inline WeylExtraction weyl_coordinates(const Mat4& u, double tol = kDefaultTol) {
  if (!u.is_finite() || unitarity_defect(u) > 1e-8)
    throw std::domain_error("weyl_coordinates: input is not unitary");
  const SchmidtSpectrum s = schmidt_numeric(u);
  const AbcProducts p = abc_from_spectrum(s, std::max(tol, 1e-7));

  WeylExtraction out;
  out.c_product = p.c;
  if (p.a <= tol && p.b <= tol) {
    out.face_ambiguous = true;
    out.point = out.face_representative();
    return out;
  }
  // cos c1 = sqrt(ab/c), cos c2 = sqrt(ac/b), cos c3 = sqrt(bc/a); guards on
  // the denominators, arccos arguments clamped into [0,1].
  if (p.a <= tol || p.b <= tol || p.c <= tol)
    throw std::domain_error(
        "weyl_coordinates: spectrum inconsistent with a chamber point");
  auto angle = [](double num, double den) {
    return std::acos(std::min(1.0, std::sqrt(num / den)));
  };
  out.point = {angle(p.a * p.b, p.c), angle(p.a * p.c, p.b),
               angle(p.b * p.c, p.a)};
  if (!in_chamber(out.point, std::max(tol, 1e-7)))
    throw std::domain_error(
        "weyl_coordinates: recovered point outside the chamber");
  return out;
}

// Image of the chamber in the (x,y) plane: 3y/2 <= x <= 2 + y/2 for
// 0 <= y <= 2.
inline std::pair<double, double> strip_bounds(double y) {
  if (y < 0.0 || y > 2.0)
    throw std::invalid_argument("strip_bounds: y must be in [0,2]");
  return {1.5 * y, 2.0 + 0.5 * y};
}

// Lower boundary L_PE(y) of the perfect-entangler region, three branches
// meeting continuously at y = 2 - sqrt(2) and y = 1.
inline double pe_lower_boundary(double y) {
  if (y < 0.0 || y > 2.0)
    throw std::invalid_argument("pe_lower_boundary: y must be in [0,2]");
  const double y_break = 2.0 - std::sqrt(2.0);
  if (y <= y_break)
    return 2.0 + y / 2.0 - (4.0 - y) * std::sqrt(y * (4.0 - y)) / 4.0;
  if (y <= 1.0) return y + 0.5;
  return y + 0.5 + 0.5 * std::sqrt((y - 1.0) * (3.0 - y));
}

enum class CnotVerdict {
  local,
  at_most_one_cnot,
  two_cnot_compatible,
  needs_three_cnot,
};

inline std::string_view to_string(CnotVerdict v) {
  switch (v) {
    case CnotVerdict::local: return "local";
    case CnotVerdict::at_most_one_cnot: return "at-most-one-cnot";
    case CnotVerdict::two_cnot_compatible: return "two-cnot-compatible";
    case CnotVerdict::needs_three_cnot: return "needs-three-cnot";
  }
  return "?";
}

// Spectral CNOT-complexity witness in the (x,y) plane. One-way: membership in
// the two-CNOT region does not certify that two CNOTs suffice.
inline CnotVerdict cnot_witness(double x, double y, double tol = kDefaultTol) {
  if (y < -tol || y > 2.0 + tol)
    throw std::invalid_argument("cnot_witness: point outside the strip");
  const auto [lo, hi] = strip_bounds(std::clamp(y, 0.0, 2.0));
  if (x < lo - tol || x > hi + tol)
    throw std::invalid_argument("cnot_witness: point outside the strip");
  if (std::abs(x) <= tol && std::abs(y) <= tol) return CnotVerdict::local;
  if (std::abs(y) <= tol && x <= 2.0 + tol) return CnotVerdict::at_most_one_cnot;
  if (x < 2.0 * y - y * y / 4.0 - tol) return CnotVerdict::needs_three_cnot;
  return CnotVerdict::two_cnot_compatible;
}

// Membership in the determinantal chamber (the image of the Weyl chamber in
// (x,y,z) space): five linear inequalities plus one quadratic.
inline bool chamber_contains(const DetCoords& d, double tol = kDefaultTol) {
  return d.z >= -tol && d.y >= -tol && d.y <= d.x + tol && d.x <= d.z + 2.0 + tol &&
         d.y >= 2.0 * d.z - tol && d.x + d.z >= 2.0 * d.y - tol &&
         d.y * d.y - d.y * (d.x + d.z) + 4.0 * d.z >= -tol;
}

struct RankApprox {
  Mat4 approximant;  // generally not unitary
  double error = 0.0;
};

// De-realigned truncated SVD of realign(u): the closest rank-<=k operator in
// Frobenius norm, with its distance.
inline RankApprox nearest_rank_k_gate_error(const Mat4& u, int k) {
  if (k < 1 || k > 3)
    throw std::invalid_argument("nearest_rank_k_gate_error: k must be in 1..3");
  const Mat4 r = realign(u);
  const Mat4 best = truncated_reconstruction(r, k);
  return {realign(best), (r - best).frobenius_norm()};
}

}  // namespace detgeo
