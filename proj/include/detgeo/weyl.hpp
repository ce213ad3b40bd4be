// Weyl chamber representation of two-qubit gates: canonical nonlocal gate
// construction, the closed-form operator Schmidt spectrum, chamber and
// perfect-entangler predicates, and a catalog of named gates.
#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "detgeo/matrix.hpp"

namespace detgeo {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kHalfPi = std::numbers::pi / 2.0;
inline constexpr double kDefaultTol = 1e-9;

struct WeylPoint {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
};

// Reduced chamber: 0 <= c3 <= c2 <= c1 <= pi/2, within tol.
inline bool in_chamber(double c1, double c2, double c3, double tol = kDefaultTol) {
  return c3 >= -tol && c2 >= c3 - tol && c1 >= c2 - tol && c1 <= kHalfPi + tol;
}

inline bool in_chamber(const WeylPoint& w, double tol = kDefaultTol) {
  return in_chamber(w.c1, w.c2, w.c3, tol);
}

inline void require_in_chamber(const WeylPoint& w, double tol = kDefaultTol) {
  if (!in_chamber(w, tol))
    throw std::domain_error("WeylPoint outside the reduced Weyl chamber");
}

// Perfect entanglers: the sub-polytope c1+c2 >= pi/2 and c2+c3 <= pi/2.
inline bool is_perfect_entangler(const WeylPoint& w, double tol = kDefaultTol) {
  return w.c1 + w.c2 >= kHalfPi - tol && w.c2 + w.c3 <= kHalfPi + tol;
}

inline Mat2 pauli_x() { return Mat2{{0.0, 1.0, 1.0, 0.0}}; }
inline Mat2 pauli_y() {
  return Mat2{{0.0, cplx{0.0, -1.0}, cplx{0.0, 1.0}, 0.0}};
}
inline Mat2 pauli_z() { return Mat2{{1.0, 0.0, 0.0, -1.0}}; }

// exp[-(i/2)(c1 XX + c2 YY + c3 ZZ)], built as the product of the three
// commuting factors cos(c_j/2) I - i sin(c_j/2) PP.
inline Mat4 canonical_gate(const WeylPoint& w, double tol = kDefaultTol) {
  require_in_chamber(w, tol);
  const Mat4 xx = kron(pauli_x(), pauli_x());
  const Mat4 yy = kron(pauli_y(), pauli_y());
  const Mat4 zz = kron(pauli_z(), pauli_z());
  const cplx mi{0.0, -1.0};
  auto factor = [&](double c, const Mat4& pp) {
    return std::cos(c / 2.0) * Mat4::identity() + mi * std::sin(c / 2.0) * pp;
  };
  return factor(w.c1, xx) * (factor(w.c2, yy) * factor(w.c3, zz));
}

struct SchmidtSpectrum {
  // Sorted descending; for special-unitary gates the squares sum to 4.
  std::array<double, 4> s{};

  double operator[](int i) const { return s[i]; }
  double sum_sq() const {
    return s[0] * s[0] + s[1] * s[1] + s[2] * s[2] + s[3] * s[3];
  }
};

// Closed-form Schmidt coefficients of the canonical gate at w. With
// C_j = cos(c_j/2), S_j = sin(c_j/2):
//   s0 = 2 sqrt((C1C2C3)^2 + (S1S2S3)^2)      s1 = 2 sqrt((C1S2S3)^2 + (S1C2C3)^2)
//   s2 = 2 sqrt((S1C2S3)^2 + (C1S2C3)^2)      s3 = 2 sqrt((S1S2C3)^2 + (C1C2S3)^2)
// Inside the chamber this labeling is already descending; we sort anyway so
// boundary roundoff cannot leak an unsorted spectrum.
inline SchmidtSpectrum schmidt_closed_form(const WeylPoint& w,
                                           double tol = kDefaultTol) {
  require_in_chamber(w, tol);
  const double c1 = std::cos(w.c1 / 2.0), s1 = std::sin(w.c1 / 2.0);
  const double c2 = std::cos(w.c2 / 2.0), s2 = std::sin(w.c2 / 2.0);
  const double c3 = std::cos(w.c3 / 2.0), s3 = std::sin(w.c3 / 2.0);
  auto hyp2 = [](double u, double v) { return 2.0 * std::sqrt(u * u + v * v); };
  SchmidtSpectrum out;
  out.s[0] = hyp2(c1 * c2 * c3, s1 * s2 * s3);
  out.s[1] = hyp2(c1 * s2 * s3, s1 * c2 * c3);
  out.s[2] = hyp2(s1 * c2 * s3, c1 * s2 * c3);
  out.s[3] = hyp2(s1 * s2 * c3, c1 * c2 * s3);
  std::stable_sort(out.s.begin(), out.s.end(), std::greater<>());
  return out;
}

// Schmidt coefficients of an arbitrary operator: singular values of the
// realignment.
inline SchmidtSpectrum schmidt_numeric(const Mat4& u) {
  return SchmidtSpectrum{singular_values(realign(u))};
}

struct CatalogEntry {
  std::string name;
  WeylPoint weyl;
  Mat4 matrix;
};

inline const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = [] {
    const double h = 1.0 / std::sqrt(2.0);
    const cplx i{0.0, 1.0};

    Mat4 cnot;
    cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1.0;

    Mat4 cz = Mat4::identity();
    cz(3, 3) = -1.0;

    Mat4 iswap;
    iswap(0, 0) = iswap(3, 3) = 1.0;
    iswap(1, 2) = iswap(2, 1) = i;

    Mat4 sqrt_iswap;
    sqrt_iswap(0, 0) = sqrt_iswap(3, 3) = 1.0;
    sqrt_iswap(1, 1) = sqrt_iswap(2, 2) = h;
    sqrt_iswap(1, 2) = sqrt_iswap(2, 1) = i * h;

    Mat4 swap;
    swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = 1.0;

    Mat4 sqrt_swap;
    sqrt_swap(0, 0) = sqrt_swap(3, 3) = 1.0;
    sqrt_swap(1, 1) = sqrt_swap(2, 2) = cplx{0.5, 0.5};
    sqrt_swap(1, 2) = sqrt_swap(2, 1) = cplx{0.5, -0.5};

    return std::vector<CatalogEntry>{
        {"identity", {0.0, 0.0, 0.0}, Mat4::identity()},
        {"cnot", {kHalfPi, 0.0, 0.0}, cnot},
        {"cz", {kHalfPi, 0.0, 0.0}, cz},
        {"iswap", {kHalfPi, kHalfPi, 0.0}, iswap},
        {"sqrt_iswap", {kHalfPi / 2.0, kHalfPi / 2.0, 0.0}, sqrt_iswap},
        {"swap", {kHalfPi, kHalfPi, kHalfPi}, swap},
        {"sqrt_swap", {kHalfPi / 2.0, kHalfPi / 2.0, kHalfPi / 2.0}, sqrt_swap},
    };
  }();
  return entries;
}

inline const CatalogEntry& catalog(std::string_view name) {
  for (const auto& e : catalog_entries())
    if (e.name == name) return e;
  throw std::invalid_argument("unknown gate name: " + std::string(name));
}

}  // namespace detgeo
