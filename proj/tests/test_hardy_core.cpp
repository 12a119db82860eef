#include <cmath>
#include <random>

#include <doctest.h>

#include "hardy/hardy_core.hpp"
#include "hardy/noor.hpp"

using namespace hardy;

namespace {

std::vector<cplx> random_box(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<cplx> c(n);
  for (auto& v : c) {
    const double re = u(rng);
    v = {re, u(rng)};
  }
  return c;
}

// Σ_{n≤D} x^n, summed term by term
double geometric(double x, std::size_t degree) {
  double s = 0.0, p = 1.0;
  for (std::size_t n = 0; n <= degree; ++n, p *= x) s += p;
  return s;
}

}  // namespace

TEST_CASE("CoeffVec and DiskPoint validate their invariants") {
  CHECK_THROWS_AS(CoeffVec(std::vector<cplx>{}), ValidationError);
  CHECK_THROWS_AS(CoeffVec({1.0, cplx(NAN, 0.0)}), ValidationError);
  CHECK_THROWS_AS(CoeffVec({cplx(INFINITY, 0.0)}), ValidationError);
  const CoeffVec f{1.0, 2.0};
  CHECK(f.degree() == 1);
  CHECK(f[5] == cplx{});

  CHECK_THROWS_AS(DiskPoint(1.0, 0.0), ValidationError);
  CHECK_THROWS_AS(DiskPoint(0.0, 1.0 - 1e-10), ValidationError);
  CHECK_NOTHROW(DiskPoint(0.9999, 0.0));
  CHECK_NOTHROW(DiskPoint::near_boundary({1.0 - 1e-12, 0.0}));
  CHECK_THROWS_AS(DiskPoint::near_boundary({1.0, 0.0}), ValidationError);
}

TEST_CASE("inner") {
  CHECK(inner(CoeffVec{1.0, 1.0}, CoeffVec{1.0, -1.0}) == cplx{});
  CHECK(inner(CoeffVec{1.0, 0.0}, CoeffVec{0.0, 1.0}) == cplx{});
  const CoeffVec k = kernel_vec(DiskPoint(0.5, 0.0), 50);
  CHECK(std::abs(inner(k, k) - 1.0 / (1.0 - 0.25)) < 1e-14);
  // mismatched degrees are zero-padded
  CHECK(inner(CoeffVec{1.0, 2.0, 3.0}, CoeffVec{1.0}) == cplx{1.0});
  CHECK(inner(CoeffVec{cplx(0, 1)}, CoeffVec{cplx(0, 1)}) == cplx{1.0});
}

TEST_CASE("eval") {
  CHECK(eval(CoeffVec{1.0, 1.0}, DiskPoint(0.5, 0.0)) == cplx{1.5});
  CHECK(eval(CoeffVec{1.0, 0.0, 0.0}, DiskPoint(0.3, -0.7)) == cplx{1.0});
  const HkFunction h = h_k(2, 4096);
  CHECK(eval(h.coeffs, DiskPoint()).real() == doctest::Approx(-std::log(2.0)).epsilon(1e-15));
}

TEST_CASE("truncation_degree is the smallest admissible degree") {
  for (double r : {0.0, 0.1, 0.5, 0.6, 0.9, 0.95, 0.99}) {
    const std::size_t d = truncation_degree(r);
    auto admissible = [&](std::size_t deg) {
      return std::pow(r, static_cast<double>(deg + 1)) / std::sqrt(1.0 - r * r) <= 1e-12;
    };
    CHECK(admissible(d));
    if (d > 0) CHECK_FALSE(admissible(d - 1));
  }
  CHECK_THROWS_AS(truncation_degree(1.0), ValidationError);
}

TEST_CASE("kernel_vec") {
  CHECK(kernel_vec(DiskPoint(), 3) == CoeffVec{1.0, 0.0, 0.0, 0.0});
  CHECK(kernel_vec(DiskPoint(0.5, 0.0), 2) == CoeffVec{1.0, 0.5, 0.25});
  const CoeffVec k = kernel_vec(DiskPoint(0.6, 0.0), 200);
  CHECK(std::abs(norm(k) * norm(k) - 1.5625) < 1e-12);
  CHECK(std::abs(norm(k) * norm(k) - geometric(0.36, 200)) < 1e-13);
  // conj(λ)^n
  const CoeffVec kc = kernel_vec(DiskPoint(0.0, 0.5), 2);
  CHECK(kc[1] == cplx(0.0, -0.5));
  CHECK(std::abs(kc[2] - cplx(-0.25, 0.0)) < 1e-17);
}

TEST_CASE("normalized_kernel") {
  CHECK(normalized_kernel(DiskPoint(), 4) == CoeffVec{1.0, 0.0, 0.0, 0.0, 0.0});
  const CoeffVec k = normalized_kernel(DiskPoint(0.5, 0.0), 100);
  CHECK(k[0].real() == doctest::Approx(std::sqrt(0.75)).epsilon(1e-14));
  CHECK_THROWS_AS(normalized_kernel(DiskPoint(0.9, 0.0), 10), ValidationError);

  const std::size_t d = 4096;
  const CoeffVec diff = h_k(2, d).coeffs - h_k(3, d).coeffs;
  CHECK(inner(diff, normalized_kernel(DiskPoint(), d)).real() == doctest::Approx(std::log(1.5)).epsilon(1e-14));
}

TEST_CASE("poly_mul") {
  CHECK(poly_mul(CoeffVec{1.0, 1.0}, CoeffVec{1.0, -1.0}, 2) == CoeffVec{1.0, 0.0, -1.0});
  CHECK(poly_mul(CoeffVec{1.0, 1.0}, CoeffVec{1.0, 1.0}, 2) == CoeffVec{1.0, 2.0, 1.0});
  CHECK(poly_mul(CoeffVec{1.0, 1.0}, CoeffVec{1.0, 1.0, 1.0}, 4) == CoeffVec{1.0, 2.0, 2.0, 1.0, 0.0});
  CHECK(poly_mul(CoeffVec{1.0, 1.0}, CoeffVec{1.0, 1.0, 1.0}, 1) == CoeffVec{1.0, 2.0});
}

TEST_CASE("div_one_minus_z") {
  CHECK(div_one_minus_z(CoeffVec{1.0, 0.0, 0.0}) == CoeffVec{1.0, 1.0, 1.0});
  CHECK(div_one_minus_z(CoeffVec{1.0, -1.0, 0.0, 0.0}) == CoeffVec{1.0, 0.0, 0.0, 0.0});
  CHECK(div_one_minus_z(CoeffVec{0.0, 1.0, -0.5}) == CoeffVec{0.0, 1.0, 0.5});
}

TEST_CASE("poly_log") {
  CHECK(poly_log(CoeffVec{1.0, 0.0, 0.0}, 5) == CoeffVec::zeros(5));
  const CoeffVec a = poly_log(CoeffVec{1.0, 1.0}, 4);
  const double mercator[] = {0.0, 1.0, -0.5, 1.0 / 3.0, -0.25};
  for (int n = 0; n <= 4; ++n) CHECK(std::abs(a[n] - mercator[n]) < 1e-15);
  const CoeffVec b = poly_log(CoeffVec{1.0, 2.0, 1.0}, 3);
  for (int n = 0; n <= 3; ++n) CHECK(std::abs(b[n] - 2.0 * mercator[n]) < 1e-15);
  CHECK_THROWS_AS(poly_log(CoeffVec{0.0, 1.0}, 3), ValidationError);
  // constant term carries log f̂(0)
  CHECK(poly_log(CoeffVec{2.0}, 0)[0].real() == doctest::Approx(std::log(2.0)));
}

TEST_CASE("property: reproducing kernel on random pairs") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double r = 0.99 * std::sqrt(u(rng));
    const DiskPoint lam(std::polar(r, 2.0 * M_PI * u(rng)));
    const std::size_t d = truncation_degree(r);
    const CoeffVec f(random_box(rng, d + 1));
    const cplx a = inner(f, kernel_vec(lam, d));
    const cplx b = eval(f, lam);
    CHECK(std::abs(a - b) <= 1e-13 * std::abs(b));
  }
}

TEST_CASE("property: conjugate symmetry") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const CoeffVec f(random_box(rng, 1 + trial * 37));
    const CoeffVec g(random_box(rng, 1 + trial * 53));
    const cplx fg = inner(f, g);
    const cplx gf = inner(g, f);
    CHECK(std::abs(fg - std::conj(gf)) <= 1e-15 * std::max(1.0, std::abs(fg)));
    CHECK(inner(f, f).imag() == 0.0);
    CHECK(inner(f, f).real() >= 0.0);
  }
}

TEST_CASE("property: normalized kernel has unit norm under the truncation rule") {
  for (double r = 0.0; r < 0.991; r += 0.09) {
    for (int a = 0; a < 8; ++a) {
      const DiskPoint lam(std::polar(r, a * M_PI / 4.0));
      const CoeffVec k = normalized_kernel(lam, truncation_degree(r));
      CHECK(std::abs(norm(k) - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("property: poly_exp inverts poly_log") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<cplx> c(5);
    c[0] = 1.0;
    for (std::size_t i = 1; i < c.size(); ++i) {
      const double re = u(rng);
      c[i] = {re, u(rng)};
    }
    const CoeffVec f(c);
    const std::size_t d = 12;
    const CoeffVec back = poly_exp(poly_log(f, d), d);
    for (std::size_t n = 0; n <= d; ++n) CHECK(std::abs(back[n] - f[n]) <= 1e-11);
  }
}

TEST_CASE("property: div_one_minus_z equals multiplication by the geometric series") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const CoeffVec f(random_box(rng, 1 + 5 * trial));
    const CoeffVec ones(std::vector<cplx>(f.size(), cplx{1.0}));
    const CoeffVec a = div_one_minus_z(f);
    const CoeffVec b = poly_mul(f, ones, f.degree());
    for (std::size_t n = 0; n <= f.degree(); ++n) CHECK(std::abs(a[n] - b[n]) <= 1e-13);
  }
}
