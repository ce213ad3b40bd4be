// Fixed-size complex linear algebra for two-qubit operators: Kronecker
// products, the realignment map, a one-sided Jacobi SVD, Schatten norms and
// truncated-SVD reconstruction.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace detgeo {

using cplx = std::complex<double>;

struct Mat2 {
  std::array<cplx, 4> e{};

  cplx& operator()(int i, int j) { return e[2 * i + j]; }
  const cplx& operator()(int i, int j) const { return e[2 * i + j]; }

  static Mat2 identity() { return Mat2{{1.0, 0.0, 0.0, 1.0}}; }
};

struct Mat4 {
  std::array<cplx, 16> e{};

  cplx& operator()(int i, int j) { return e[4 * i + j]; }
  const cplx& operator()(int i, int j) const { return e[4 * i + j]; }

  static Mat4 identity() {
    Mat4 m;
    for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
    return m;
  }

  Mat4 adjoint() const {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) r(i, j) = std::conj((*this)(j, i));
    return r;
  }

  cplx trace() const {
    return (*this)(0, 0) + (*this)(1, 1) + (*this)(2, 2) + (*this)(3, 3);
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const auto& v : e) s += std::norm(v);
    return std::sqrt(s);
  }

  bool is_finite() const {
    for (const auto& v : e)
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
  }

  friend Mat4 operator*(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 4; ++k) {
        const cplx aik = a(i, k);
        if (aik == cplx{}) continue;
        for (int j = 0; j < 4; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  friend Mat4 operator+(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (int i = 0; i < 16; ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
  }

  friend Mat4 operator-(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (int i = 0; i < 16; ++i) r.e[i] = a.e[i] - b.e[i];
    return r;
  }

  friend Mat4 operator*(cplx s, const Mat4& a) {
    Mat4 r;
    for (int i = 0; i < 16; ++i) r.e[i] = s * a.e[i];
    return r;
  }
};

// ‖u†u − I‖_F; zero for exactly unitary u.
inline double unitarity_defect(const Mat4& u) {
  return (u.adjoint() * u - Mat4::identity()).frobenius_norm();
}

// Qubit A is the most significant index: (a⊗b)[2i_A+i_B][2j_A+j_B].
inline Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 r;
  for (int ia = 0; ia < 2; ++ia)
    for (int ib = 0; ib < 2; ++ib)
      for (int ja = 0; ja < 2; ++ja)
        for (int jb = 0; jb < 2; ++jb)
          r(2 * ia + ib, 2 * ja + jb) = a(ia, ja) * b(ib, jb);
  return r;
}

// Realignment map: R[2i_A+j_A][2i_B+j_B] = u[2i_A+i_B][2j_A+j_B].
// An involution; the singular values of R(u) are the operator Schmidt
// coefficients of u.
inline Mat4 realign(const Mat4& u) {
  Mat4 r;
  for (int ia = 0; ia < 2; ++ia)
    for (int ja = 0; ja < 2; ++ja)
      for (int ib = 0; ib < 2; ++ib)
        for (int jb = 0; jb < 2; ++jb)
          r(2 * ia + ja, 2 * ib + jb) = u(2 * ia + ib, 2 * ja + jb);
  return r;
}

using SingularValues4 = std::array<double, 4>;

struct Svd4 {
  // a = scaled_left * v.adjoint(); column j of scaled_left is sigma[j] times
  // the j-th left singular vector.
  Mat4 scaled_left;
  Mat4 v;
  SingularValues4 sigma{};
};

// One-sided Jacobi SVD on a 4x4 complex matrix. Deterministic sweep order,
// converges to machine precision, no trouble with repeated singular values.
inline Svd4 svd4(const Mat4& a) {
  if (!a.is_finite()) throw std::invalid_argument("svd4: non-finite entries");
  Mat4 b = a;
  Mat4 v = Mat4::identity();

  constexpr int max_sweeps = 60;
  constexpr double tol = 1e-30;  // on |h_pq|^2 relative to h_pp*h_qq

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    bool rotated = false;
    for (int p = 0; p < 4; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        double hpp = 0.0, hqq = 0.0;
        cplx hpq = 0.0;
        for (int i = 0; i < 4; ++i) {
          hpp += std::norm(b(i, p));
          hqq += std::norm(b(i, q));
          hpq += std::conj(b(i, p)) * b(i, q);
        }
        if (std::norm(hpq) <= tol * hpp * hqq || hpp == 0.0 || hqq == 0.0)
          continue;
        rotated = true;

        // Phase-rotate column q so the cross term becomes real, then apply a
        // real Jacobi rotation annihilating it.
        const double r = std::abs(hpq);
        const cplx phase = hpq / r;
        const double tau = (hqq - hpp) / (2.0 * r);
        const double t =
            (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (int i = 0; i < 4; ++i) {
          const cplx bp = b(i, p);
          const cplx bq = b(i, q) / phase;
          b(i, p) = c * bp - s * bq;
          b(i, q) = s * bp + c * bq;
          const cplx vp = v(i, p);
          const cplx vq = v(i, q) / phase;
          v(i, p) = c * vp - s * vq;
          v(i, q) = s * vp + c * vq;
        }
      }
    }
    if (!rotated) break;
  }

  SingularValues4 sigma{};
  for (int j = 0; j < 4; ++j) {
    double s = 0.0;
    for (int i = 0; i < 4; ++i) s += std::norm(b(i, j));
    sigma[j] = std::sqrt(s);
  }

  // Sort descending, stable on ties.
  std::array<int, 4> order{0, 1, 2, 3};
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return sigma[x] > sigma[y]; });
  Svd4 out;
  for (int j = 0; j < 4; ++j) {
    out.sigma[j] = sigma[order[j]];
    for (int i = 0; i < 4; ++i) {
      out.scaled_left(i, j) = b(i, order[j]);
      out.v(i, j) = v(i, order[j]);
    }
  }
  return out;
}

inline SingularValues4 singular_values(const Mat4& m) { return svd4(m).sigma; }

// Polar projection: the closest unitary to m in Frobenius norm (W V^dag from
// the SVD). Requires m nonsingular.
inline Mat4 nearest_unitary(const Mat4& m) {
  const Svd4 d = svd4(m);
  if (d.sigma[3] <= 0.0)
    throw std::invalid_argument("nearest_unitary: singular input");
  Mat4 r;
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i)
      for (int c = 0; c < 4; ++c)
        r(i, c) += d.scaled_left(i, j) / d.sigma[j] * std::conj(d.v(c, j));
  return r;
}

// (Σ values[i]^p)^{1/p}; p = infinity returns the largest value. p=2 is the
// Frobenius norm of the source matrix.
inline double schatten_norm(const SingularValues4& values, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("schatten_norm: p must be >= 1");
  if (std::isinf(p)) return values[0];
  const double vmax = values[0];
  if (vmax == 0.0) return 0.0;
  double acc = 0.0;
  for (double v : values) acc += std::pow(v / vmax, p);
  return vmax * std::pow(acc, 1.0 / p);
}

// Best rank-<=k Frobenius approximation (Eckart-Young): keep the k leading
// SVD terms.
inline Mat4 truncated_reconstruction(const Mat4& m, int k) {
  if (k < 1 || k > 4)
    throw std::invalid_argument("truncated_reconstruction: k must be in 1..4");
  const Svd4 d = svd4(m);
  Mat4 r;
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < 4; ++i)
      for (int c = 0; c < 4; ++c)
        r(i, c) += d.scaled_left(i, j) * std::conj(d.v(c, j));
  return r;
}

}  // namespace detgeo
