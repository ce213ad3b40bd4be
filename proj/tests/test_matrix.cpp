#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

using namespace detgeo;
using Catch::Approx;

TEST_CASE("kron basics") {
  const Mat4 ii = kron(Mat2::identity(), Mat2::identity());
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(ii(i, j) == (i == j ? cplx{1.0} : cplx{0.0}));

  const Mat4 xx = kron(pauli_x(), pauli_x());
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(xx(i, j) == (i + j == 3 ? cplx{1.0} : cplx{0.0}));

  const Mat4 zz = kron(pauli_z(), pauli_z());
  CHECK(zz(0, 0) == cplx{1.0});
  CHECK(zz(1, 1) == cplx{-1.0});
  CHECK(zz(2, 2) == cplx{-1.0});
  CHECK(zz(3, 3) == cplx{1.0});
}

TEST_CASE("realign is an involution and maps products to rank one") {
  Rng rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    const Mat4 m = test::random_matrix(rng);
    const Mat4 back = realign(realign(m));
    for (int i = 0; i < 16; ++i) CHECK(back.e[i] == m.e[i]);
  }
  for (int trial = 0; trial < 50; ++trial) {
    std::normal_distribution<double> n;
    Mat2 a, b;
    for (auto& e : a.e) e = cplx{n(rng), n(rng)};
    for (auto& e : b.e) e = cplx{n(rng), n(rng)};
    const auto sv = singular_values(realign(kron(a, b)));
    CHECK(sv[1] <= 1e-12 * sv[0]);
  }
}

TEST_CASE("realignment singular values of named gates") {
  const auto sv_id = singular_values(realign(Mat4::identity()));
  CHECK(sv_id[0] == Approx(2.0).margin(1e-12));
  CHECK(sv_id[1] == Approx(0.0).margin(1e-12));

  const auto sv_swap = singular_values(realign(catalog("swap").matrix));
  for (int i = 0; i < 4; ++i) CHECK(sv_swap[i] == Approx(1.0).margin(1e-12));

  const auto sv_cnot = singular_values(realign(catalog("cnot").matrix));
  CHECK(sv_cnot[0] == Approx(std::sqrt(2.0)).margin(1e-12));
  CHECK(sv_cnot[1] == Approx(std::sqrt(2.0)).margin(1e-12));
  CHECK(sv_cnot[2] == Approx(0.0).margin(1e-12));
  CHECK(sv_cnot[3] == Approx(0.0).margin(1e-12));
}

TEST_CASE("singular values: identity, zero, accuracy on random unitaries") {
  const auto sv = singular_values(Mat4::identity());
  for (int i = 0; i < 4; ++i) CHECK(sv[i] == Approx(1.0).margin(1e-13));

  const auto sv0 = singular_values(Mat4{});
  for (int i = 0; i < 4; ++i) CHECK(sv0[i] == 0.0);

  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Mat4 u = test::random_unitary(rng);
    const auto s = singular_values(realign(u));
    const double sum_sq = s[0] * s[0] + s[1] * s[1] + s[2] * s[2] + s[3] * s[3];
    CHECK(sum_sq == Approx(4.0).margin(1e-10));
    CHECK(s[0] >= s[1]);
    CHECK(s[1] >= s[2]);
    CHECK(s[2] >= s[3]);
    CHECK(s[3] >= 0.0);
  }
}

TEST_CASE("svd reconstructs its input") {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Mat4 m = test::random_matrix(rng);
    const Svd4 d = svd4(m);
    Mat4 rec;
    for (int j = 0; j < 4; ++j)
      for (int i = 0; i < 4; ++i)
        for (int c = 0; c < 4; ++c)
          rec(i, c) += d.scaled_left(i, j) * std::conj(d.v(c, j));
    CHECK((rec - m).frobenius_norm() <= 1e-12 * m.frobenius_norm());
  }
}

TEST_CASE("schatten norm values and validation") {
  const SingularValues4 ones{1.0, 1.0, 1.0, 1.0};
  CHECK(schatten_norm(ones, 2.0) == Approx(2.0).margin(1e-14));
  CHECK(schatten_norm(ones, std::numeric_limits<double>::infinity()) == 1.0);

  const double r2 = std::sqrt(2.0);
  const SingularValues4 cnot{r2, r2, 0.0, 0.0};
  CHECK(schatten_norm(cnot, 1.0) == Approx(2.0 * r2).margin(1e-14));

  CHECK_THROWS_AS(schatten_norm(ones, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(schatten_norm(ones, -1.0), std::invalid_argument);
}

TEST_CASE("schatten norm is nonincreasing in p") {
  Rng rng(11);
  std::uniform_real_distribution<double> u(0.0, 3.0);
  for (int trial = 0; trial < 100; ++trial) {
    SingularValues4 v{u(rng), u(rng), u(rng), u(rng)};
    std::sort(v.begin(), v.end(), std::greater<>());
    double prev = schatten_norm(v, 1.0);
    for (double p : {1.5, 2.0, 3.0, 7.0, 50.0,
                     std::numeric_limits<double>::infinity()}) {
      const double cur = schatten_norm(v, p);
      CHECK(cur <= prev + 1e-12);
      prev = cur;
    }
  }
}

TEST_CASE("truncated reconstruction: trivial ranks") {
  Rng rng(5);
  const Mat4 m = test::random_matrix(rng);
  CHECK((truncated_reconstruction(m, 4) - m).frobenius_norm() <= 1e-12);

  const Mat4 r_id = realign(Mat4::identity());
  CHECK((truncated_reconstruction(r_id, 1) - r_id).frobenius_norm() <= 1e-12);

  const Mat4 r_swap = realign(catalog("swap").matrix);
  const double res = (r_swap - truncated_reconstruction(r_swap, 2)).frobenius_norm();
  CHECK(res * res == Approx(2.0).margin(1e-12));

  CHECK_THROWS_AS(truncated_reconstruction(m, 0), std::invalid_argument);
  CHECK_THROWS_AS(truncated_reconstruction(m, 5), std::invalid_argument);
}

TEST_CASE("Eckart-Young optimality against random low-rank candidates") {
  Rng rng(13);
  std::normal_distribution<double> n;
  for (int trial = 0; trial < 20; ++trial) {
    const Mat4 m = test::random_matrix(rng);
    const auto sv = singular_values(m);
    for (int k = 1; k <= 3; ++k) {
      double tail = 0.0;
      for (int j = k; j < 4; ++j) tail += sv[j] * sv[j];
      const Mat4 best = truncated_reconstruction(m, k);
      const double res = (m - best).frobenius_norm();
      CHECK(res * res == Approx(tail).margin(1e-10));

      // No random rank-k candidate does better.
      for (int cand = 0; cand < 30; ++cand) {
        Mat4 v;
        for (int t = 0; t < k; ++t) {
          cplx col[4], row[4];
          for (int i = 0; i < 4; ++i) col[i] = cplx{n(rng), n(rng)};
          for (int i = 0; i < 4; ++i) row[i] = cplx{n(rng), n(rng)};
          for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) v(i, j) += col[i] * row[j];
        }
        CHECK((m - v).frobenius_norm() >= res - 1e-10);
      }
    }
  }
}

TEST_CASE("nearest unitary is unitary and fixes unitaries") {
  Rng rng(17);
  const Mat4 u = test::random_unitary(rng);
  CHECK((nearest_unitary(u) - u).frobenius_norm() <= 1e-10);

  Mat4 perturbed = u;
  perturbed(0, 0) += 1e-5;
  const Mat4 pu = nearest_unitary(perturbed);
  CHECK(unitarity_defect(pu) <= 1e-12);
  CHECK((pu - u).frobenius_norm() <= 1e-4);

  CHECK_THROWS_AS(nearest_unitary(Mat4{}), std::invalid_argument);
}
