#include <random>

#include <doctest.h>
#include <omp.h>

#include "hardy/kernels.hpp"

using namespace hardy::kernels;

namespace {

std::vector<cplx> random_vec(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<cplx> v(n);
  for (auto& x : v) {
    const double re = u(rng);
    x = {re, u(rng)};
  }
  return v;
}

}  // namespace

TEST_CASE("parallel reductions agree with the serial reference") {
  for (std::size_t n : {1u, 7u, 4096u, 4097u, 20000u, 65537u}) {
    const auto a = random_vec(n, n);
    const auto b = random_vec(n, n + 1);
    const cplx s = serial::dot(a, b);
    const cplx p = parallel::dot(a, b);
    CHECK(std::abs(s - p) <= 1e-13 * static_cast<double>(n));
    CHECK(std::abs(serial::norm_sq(a) - parallel::norm_sq(a)) <= 1e-13 * static_cast<double>(n));
  }
}

TEST_CASE("parallel matvec matches serial exactly") {
  const std::size_t rows = 150, cols = 130;
  const auto m = random_vec(rows * cols, 1);
  const auto x = random_vec(cols, 2);
  std::vector<cplx> ys(rows), yp(rows);
  serial::matvec({m, rows, cols}, x, ys);
  parallel::matvec({m, rows, cols}, x, yp);
  CHECK(ys == yp);
  // short x is zero-padded
  serial::matvec({m, rows, cols}, std::span<const cplx>(x).first(10), ys);
  parallel::matvec({m, rows, cols}, std::span<const cplx>(x).first(10), yp);
  CHECK(ys == yp);
}

TEST_CASE("multi_dot and subtract_combination") {
  const std::size_t n = 9000;
  std::vector<std::vector<cplx>> store;
  for (int j = 0; j < 5; ++j) store.push_back(random_vec(n, 10 + j));
  std::vector<std::span<const cplx>> cols(store.begin(), store.end());
  const auto v = random_vec(n, 99);
  std::vector<cplx> cs(5), cp(5);
  serial::multi_dot(cols, v, cs);
  parallel::multi_dot(cols, v, cp);
  for (int j = 0; j < 5; ++j) CHECK(std::abs(cs[j] - cp[j]) < 1e-10);

  auto ws = v, wp = v;
  serial::subtract_combination(cols, cs, ws);
  parallel::subtract_combination(cols, cs, wp);
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(ws[i] - wp[i]));
  CHECK(worst < 1e-13);
}

TEST_CASE("parallel results do not depend on the thread count") {
  const auto a = random_vec(100000, 5);
  const auto b = random_vec(100000, 6);
  std::vector<std::vector<cplx>> store{random_vec(100000, 7), random_vec(100000, 8)};
  std::vector<std::span<const cplx>> cols(store.begin(), store.end());
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const cplx d1 = parallel::dot(a, b);
  std::vector<cplx> m1(2);
  parallel::multi_dot(cols, a, m1);
  for (int t : {2, 3, 4, 8}) {
    omp_set_num_threads(t);
    CHECK(parallel::dot(a, b) == d1);
    std::vector<cplx> mt(2);
    parallel::multi_dot(cols, a, mt);
    CHECK(mt == m1);
  }
  omp_set_num_threads(saved);
}
