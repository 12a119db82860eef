#include <cmath>
#include <numbers>

#include <doctest.h>

#include "hardy/hardy_core.hpp"
#include "hardy/noor.hpp"
#include "hardy/operators.hpp"

using namespace hardy;

namespace {

constexpr std::size_t kD = 4096;

double max_abs_diff(const CoeffVec& a, const CoeffVec& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

GramSystem span_of(std::initializer_list<CoeffVec> vs, std::size_t degree) {
  GramSystem g(degree);
  int i = 0;
  for (const auto& v : vs) g.append(v.resized(degree), "v" + std::to_string(i++));
  return g;
}

}  // namespace

TEST_CASE("h_k coefficients") {
  const HkFunction h2 = h_k(2, kD);
  CHECK(h2.coeffs[0].real() == doctest::Approx(-0.6931472).epsilon(1e-7));
  CHECK(h2.coeffs[2].real() == doctest::Approx(-0.1931472).epsilon(1e-6));
  CHECK(h_k(3, kD).coeffs[1].real() == doctest::Approx(-0.0986123).epsilon(1e-6));
  CHECK(std::abs(h2.coeffs[2].real() - (1.5 - 1.0 - std::log(2.0))) < 1e-15);
  CHECK_THROWS_AS(h_k(1, kD), ValidationError);
  CHECK_THROWS_AS(h_k(8, 5), ValidationError);
  CHECK(HkFunction::coefficient(2, 0, harmonic_numbers(0)) == -std::log(2.0));
}

TEST_CASE("harmonic numbers") {
  const auto h = harmonic_numbers(10);
  CHECK(h[0] == 0.0);
  CHECK(h[1] == 1.0);
  CHECK(h[4] == doctest::Approx(25.0 / 12.0).epsilon(1e-15));
  // asymptotic expansion log n + γ + 1/(2n) − 1/(12n²)
  const auto big = harmonic_numbers(1000000);
  const double n = 1e6;
  CHECK(std::abs(big.back() - (std::log(n) + std::numbers::egamma + 0.5 / n - 1.0 / (12 * n * n))) < 1e-14);
}

TEST_CASE("property: h_k invariants") {
  for (std::size_t k = 2; k <= 20; ++k) {
    const HkFunction h = h_k(k, kD);
    CHECK(h.coeffs[0].real() == doctest::Approx(-std::log(static_cast<double>(k))).epsilon(1e-15));
    CHECK(h.coeffs[1].real() == doctest::Approx(1.0 - std::log(static_cast<double>(k))).epsilon(1e-14));
    // |ĥ_k(n)| ≤ C/n with C = k on the tail
    for (std::size_t n = 4 * k; n <= kD; n += 37) CHECK(std::abs(h.coeffs[n]) * static_cast<double>(n) <= k);
  }
}

TEST_CASE("property: harmonic rule agrees with the formal-series oracle") {
  for (std::size_t k = 2; k <= 16; ++k) {
    const std::size_t d = 1024;
    CHECK(max_abs_diff(h_k(k, d).coeffs, h_k_series_oracle(k, d)) <= 1e-11);
  }
}

TEST_CASE("property: W_n h_k = h_nk − h_n") {
  for (std::size_t n = 2; n <= 8; ++n) {
    const HkFunction hn = h_k(n, kD);
    for (std::size_t k = 2; k <= 8; ++k) {
      const CoeffVec lhs = w_apply(n, h_k(k, kD / n).coeffs.resized(kD / n));
      const CoeffVec rhs = h_k(n * k, kD).coeffs - hn.coeffs;
      double m = 0.0;
      for (std::size_t j = 0; j <= std::min(lhs.degree(), kD); ++j) m = std::max(m, std::abs(lhs[j] - rhs[j]));
      CHECK(m <= 1e-12);
    }
  }
}

TEST_CASE("property: orthogonality against 1 − z") {
  const CoeffVec e{1.0, -1.0};
  std::vector<CoeffVec> h;
  for (std::size_t k = 0; k <= 64; ++k) h.push_back(k < 2 ? CoeffVec{0.0} : h_k(k, kD).coeffs);
  for (std::size_t k = 2; k <= 64; ++k) {
    CHECK(std::abs(inner(h[k], e) + 1.0) <= 1e-12);
    for (std::size_t l = 2; l <= 64; ++l) CHECK(std::abs(inner(h[k] - h[l], e)) <= 1e-12);
  }
}

TEST_CASE("build_basis") {
  const SubspaceBasis m3 = build_basis(Family::M, 3, 0, kD);
  REQUIRE(m3.size() == 1);
  CHECK(m3.labels()[0] == "h_2-h_3");
  CHECK(m3.labels().size() == 1);

  const SubspaceBasis md = build_basis(Family::Md, 8, 2, kD);
  CHECK(md.labels() == std::vector<std::string>{"h_2-h_4", "h_2-h_6", "h_2-h_8", "h_4-h_6", "h_4-h_8", "h_6-h_8"});

  const SubspaceBasis n4 = build_basis(Family::N, 4, 0, kD);
  CHECK(n4.labels() == std::vector<std::string>{"h_2", "h_3", "h_4"});
  CHECK(build_basis(Family::N, 10, 0, kD).size() == 9);

  const SubspaceBasis star = build_basis(Family::M, 6, 0, kD, PairMode::star);
  CHECK(star.labels() == std::vector<std::string>{"h_2-h_3", "h_2-h_4", "h_2-h_5", "h_2-h_6"});
  const SubspaceBasis m5 = build_basis(Family::M, 5, 0, 100);
  for (const auto& v : m5.vectors()) CHECK(v.degree() == 100);

  CHECK_THROWS_AS(build_basis(Family::M, 2, 0, kD), ValidationError);
  CHECK_THROWS_AS(build_basis(Family::Md, 8, 1, kD), ValidationError);
  CHECK_THROWS_AS(build_basis(Family::Md, 3, 2, kD), ValidationError);
  CHECK_THROWS_AS(build_basis(Family::N, 1, 0, kD), ValidationError);
  CHECK_THROWS_AS(build_basis(Family::custom, 4, 0, kD), ValidationError);
  CHECK_THROWS_AS(build_basis(Family::N, 50, 0, 20), ValidationError);
  CHECK(parse_family("M_d") == Family::Md);
  CHECK_THROWS_AS(parse_family("Q"), ValidationError);
}

TEST_CASE("property: M_d basis lies in M") {
  const GramSystem m(build_basis(Family::M, 12, 0, 1024));
  const SubspaceBasis m3 = build_basis(Family::Md, 12, 3, 1024);
  for (const auto& v : m3.vectors()) CHECK(m.dist(v) <= 1e-10);
}

TEST_CASE("property: lattice nesting d1 | d2 gives M_d2 inside M_d1") {
  const std::size_t K = 24, d = 2048;
  for (std::size_t d1 : {2u, 3u}) {
    const GramSystem big(build_basis(Family::Md, K, d1, d));
    for (std::size_t d2 = 2 * d1; d2 <= K / 2; d2 += d1) {
      const SubspaceBasis small = build_basis(Family::Md, K, d2, d);
      for (const auto& v : small.vectors()) CHECK(big.dist(v) <= 1e-10);
    }
  }
}

TEST_CASE("dist") {
  const GramSystem m3(build_basis(Family::M, 3, 0, kD));
  CHECK(m3.dist(h_k(2, kD).coeffs - h_k(3, kD).coeffs) <= 1e-10);
  for (std::size_t K : {3u, 5u, 12u}) {
    const GramSystem m(build_basis(Family::M, K, 0, kD));
    CHECK(std::abs(dist(one_minus_z(kD), m) - std::sqrt(2.0)) <= 1e-8);
  }
  CHECK(dist(CoeffVec{1.0}.resized(10), GramSystem(10)) == 1.0);
}

TEST_CASE("project") {
  const GramSystem m(build_basis(Family::M, 6, 0, kD));
  const CoeffVec member = h_k(3, kD).coeffs - h_k(5, kD).coeffs;
  CHECK(max_abs_diff(m.project(member), member) <= 1e-10);
  CHECK(norm(project(one_minus_z(kD), m)) <= 1e-8);

  const std::size_t d = 200;
  const GramSystem e = span_of({one_minus_z(d)}, d);
  for (const DiskPoint lam : {DiskPoint(), DiskPoint(0.5, 0.0), DiskPoint(0.3, -0.6)}) {
    const CoeffVec expect = (0.5 * (1.0 - std::conj(lam.value()))) * one_minus_z(d);
    CHECK(max_abs_diff(e.project(kernel_vec(lam, d)), expect) <= 1e-14);
  }
}

TEST_CASE("property: projection is idempotent and matches dist") {
  const GramSystem m(build_basis(Family::N, 10, 0, 1024));
  for (const CoeffVec& f : {CoeffVec{1.0}, CoeffVec{0.2, -1.0, 3.0}, kernel_vec(DiskPoint(0.4, 0.4), 1024)}) {
    const CoeffVec p = m.project(f.resized(1024));
    CHECK(max_abs_diff(m.project(p), p) <= 1e-10);
    const double err = std::abs(norm(f.resized(1024) - p) - m.dist(f));
    CHECK(err <= 1e-10);
    CHECK(m.dist(f) <= norm(f) + 1e-15);
  }
}

TEST_CASE("subspace_kernel") {
  const std::size_t d = 64;
  const GramSystem e = span_of({one_minus_z(d)}, d);
  const CoeffVec k0 = subspace_kernel(e, DiskPoint());
  CHECK(max_abs_diff(k0, CoeffVec{0.5, -0.5}.resized(d)) <= 1e-15);

  GramSystem full(16);
  for (std::size_t i = 0; i <= 16; ++i) full.append(CoeffVec::monomial(i, 16), "z^" + std::to_string(i));
  const DiskPoint lam(0.1, 0.05);
  CHECK(max_abs_diff(subspace_kernel(full, lam), kernel_vec(lam, 16)) <= 1e-14);

  CHECK(max_abs_diff(complement_kernel(e, DiskPoint()), CoeffVec{0.5, 0.5}.resized(d)) <= 1e-15);
  CHECK_THROWS_AS(subspace_kernel(e, DiskPoint(0.9, 0.0)), ValidationError);
}

TEST_CASE("property: subspace kernel reproduces members of the span") {
  const std::size_t d = 3000;
  const GramSystem m(build_basis(Family::M, 8, 0, d));
  const CoeffVec f = h_k(2, d).coeffs - h_k(7, d).coeffs;
  for (const DiskPoint& lam : polar_grid(4, 6, 0.95)) {
    CHECK(std::abs(inner(f, subspace_kernel(m, lam)) - eval(f, lam)) <= 1e-9);
  }
}

TEST_CASE("GramSystem rank and conditioning") {
  const GramSystem all(build_basis(Family::M, 6, 0, 1024));
  CHECK(all.size() == 10);
  CHECK(all.effective_rank() == 4);
  CHECK(all.rank_collapsed());
  const GramSystem star(build_basis(Family::M, 6, 0, 1024, PairMode::star));
  CHECK(star.effective_rank() == 4);
  CHECK_FALSE(star.rank_collapsed());
  CHECK_FALSE(star.ill_conditioned());
  CHECK(star.condition_estimate() >= 1.0);

  GramSystem near(4);
  near.append(CoeffVec{1.0, 0.0}.resized(4), "a");
  near.append(CoeffVec{1.0, 1e-8}.resized(4), "b");
  CHECK(near.effective_rank() == 2);
  CHECK(near.ill_conditioned());
  GramSystem g(4);
  CHECK(g.append_if_independent(CoeffVec{1.0}.resized(4), "a", 1e-10));
  CHECK_FALSE(g.append_if_independent(CoeffVec{2.0}.resized(4), "b", 1e-10));
  CHECK(g.size() == 1);
  g.append(CoeffVec{0.0, 1.0}, "short");
  CHECK(g.basis().vectors().back().degree() == 4);
  CHECK(g.dist(CoeffVec{0.0, 3.0}) <= 1e-15);
}

TEST_CASE("eq4_check") {
  const ClosedFormCheck c0 = eq4_check(DiskPoint());
  CHECK(c0.closed_form == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK(c0.direct == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
  const ClosedFormCheck c6 = eq4_check(DiskPoint(0.6, 0.0));
  CHECK(c6.closed_form == doctest::Approx(std::sqrt(1.0 / 0.64 - 0.08)).epsilon(1e-14));
  CHECK(c6.closed_form == doctest::Approx(1.2175796).epsilon(1e-7));
  CHECK(std::abs(c6.closed_form - c6.direct) <= 1e-10);
  const ClosedFormCheck ci = eq4_check(DiskPoint(0.0, 0.6));
  CHECK(std::abs(ci.closed_form - ci.direct) <= 1e-10);
}

TEST_CASE("property: eq4 on a grid") {
  for (const DiskPoint& lam : polar_grid(12, 9, 0.95)) {
    const ClosedFormCheck c = eq4_check(lam);
    CHECK(std::abs(c.closed_form - c.direct) <= 1e-10);
  }
}

TEST_CASE("eq6_check") {
  const ComplexClosedFormCheck c = eq6_check(2, 3, DiskPoint());
  CHECK(c.closed_form.real() == doctest::Approx(std::sqrt(2.0) * std::log(1.5)).epsilon(1e-14));
  CHECK(std::abs(c.direct - c.closed_form) <= 1e-12);
  CHECK(std::abs(c.closed_form - 0.5734143) < 1e-7);
  const ComplexClosedFormCheck same = eq6_check(4, 4, DiskPoint(0.3, 0.2));
  CHECK(std::abs(same.closed_form) == 0.0);
  CHECK(std::abs(same.direct) <= 1e-15);
  const ComplexClosedFormCheck half = eq6_check(2, 3, DiskPoint(0.5, 0.0));
  CHECK(std::abs(half.closed_form - half.direct) <= 1e-8);
  CHECK_THROWS_AS(log_quotient(2, 3, 1.0), ValidationError);
}

TEST_CASE("property: eq6 on a grid for k, l ≤ 6") {
  const auto grid = polar_grid(5, 6, 0.9);
  for (std::size_t k = 2; k <= 6; ++k)
    for (std::size_t l = 2; l <= 6; ++l)
      for (const DiskPoint& lam : grid) {
        const ComplexClosedFormCheck c = eq6_check(k, l, lam);
        CHECK(std::abs(c.closed_form - c.direct) <= 1e-8);
      }
}

TEST_CASE("eq7_limit") {
  const BoundaryLimit a = eq7_limit(2, 4);
  CHECK(a.analytic == 1.0);
  CHECK(std::abs(a.extrapolated - 1.0) <= 1e-6);
  const BoundaryLimit b = eq7_limit(3, 3);
  CHECK(b.analytic == 0.0);
  CHECK(b.extrapolated == 0.0);
  const BoundaryLimit c = eq7_limit(2, 3);
  CHECK(c.analytic == 0.5);
  CHECK(std::abs(c.extrapolated - 0.5) <= 1e-6);
  CHECK(c.final_magnitude <= 1e-3);
  // the cancellation-free quotient matches the direct one away from 1
  CHECK(log_quotient_near_one(2, 5, 0.25) == doctest::Approx(log_quotient(2, 5, 0.75).real()).epsilon(1e-13));
}

TEST_CASE("property: eq7 limit is (l − k)/2") {
  for (std::size_t k = 2; k <= 8; ++k)
    for (std::size_t l = 2; l <= 8; ++l) {
      const BoundaryLimit b = eq7_limit(k, l);
      CHECK(b.analytic == (static_cast<double>(l) - static_cast<double>(k)) / 2.0);
      CHECK(std::abs(b.extrapolated - b.analytic) <= 1e-6);
    }
}

TEST_CASE("property: adjoint annihilation of 1 − z^m") {
  for (std::size_t m = 1; m <= 16; ++m) {
    std::vector<cplx> c(200);
    c[0] = 1.0;
    c[m] = -1.0;
    const CoeffVec f(c);
    for (std::size_t n = m + 1; n <= 64; ++n) CHECK(w_adjoint_apply(n, f) == CoeffVec::zeros(f.degree() / n));
  }
}

TEST_CASE("codim_probe") {
  const std::size_t d = 4096;
  const std::vector<NamedVector> cands{{"1-z", one_minus_z(d)},
                                       {"h_2-h_3", h_k(2, d).coeffs - h_k(3, d).coeffs},
                                       {"one", CoeffVec{1.0}.resized(d)}};
  const SweepReport r = codim_probe(12, d, cands);
  CHECK(r.columns() == std::vector<std::string>{"K", "candidateLabel", "dist", "effectiveRank", "condEstimate"});
  const auto labels = r.text_column("candidateLabel");
  const auto dist = r.numeric_column("dist");
  std::vector<double> one;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == "1-z") CHECK(std::abs(dist[i] - std::sqrt(2.0)) <= 1e-8);
    if (labels[i] == "h_2-h_3") CHECK(dist[i] <= 1e-10);
    if (labels[i] == "one") one.push_back(dist[i]);
  }
  REQUIRE(one.size() == 10);
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i] > 0.0);
    if (i > 0) CHECK(one[i] <= one[i - 1] + 1e-12);
  }
  CHECK_THROWS_AS(codim_probe(2, d), ValidationError);
}

TEST_CASE("complement_direction is orthogonal to M and to 1 − z") {
  const std::size_t d = 2048, K = 10;
  const CoeffVec c = complement_direction(K, d);
  CHECK(norm(c) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(inner(c, one_minus_z(d))) <= 1e-10);
  const GramSystem m(build_basis(Family::M, K, 0, d, PairMode::star));
  CHECK(std::abs(m.dist(c) - 1.0) <= 1e-10);
}

TEST_CASE("density_sequence") {
  const std::size_t d = 4096;
  const std::vector<NamedVector> targets{{"1-z", one_minus_z(d)}, {"h_2", h_k(2, d).coeffs}, {"one", CoeffVec{1.0}}};
  SUBCASE("family N") {
    const SweepReport r = density_sequence(targets, Family::N, 16, d);
    const auto labels = r.text_column("targetLabel");
    const auto dist = r.numeric_column("dist");
    std::vector<double> one;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == "h_2") CHECK(dist[i] <= 1e-10);
      if (labels[i] == "one") one.push_back(dist[i]);
    }
    REQUIRE(one.size() == 15);
    for (std::size_t i = 1; i < one.size(); ++i) CHECK(one[i] <= one[i - 1] + 1e-12);
    CHECK(one.back() > 0.0);
  }
  SUBCASE("family M") {
    const SweepReport r = density_sequence(targets, Family::M, 16, d);
    const auto labels = r.text_column("targetLabel");
    const auto dist = r.numeric_column("dist");
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == "1-z") CHECK(std::abs(dist[i] - std::sqrt(2.0)) <= 1e-8);
  }
}
