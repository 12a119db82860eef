#include "hardy/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "hardy/hardy_core.hpp"

namespace hardy {

OpMatrix::OpMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
  if (dim == 0) throw ValidationError("OpMatrix: dimension must be positive");
}

OpMatrix::OpMatrix(std::size_t dim, std::vector<cplx> row_major) : dim_(dim), entries_(std::move(row_major)) {
  if (dim == 0) throw ValidationError("OpMatrix: dimension must be positive");
  if (entries_.size() != dim * dim) throw ValidationError("OpMatrix: entry count must be dim*dim");
  for (const auto& v : entries_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw ValidationError("OpMatrix: non-finite entry");
  }
}

OpMatrix identity_op(std::size_t degree) {
  OpMatrix t(degree + 1);
  for (std::size_t i = 0; i <= degree; ++i) t.set(i, i, 1.0);
  return t;
}

OpMatrix shift_op(std::size_t degree) {
  if (degree < 1) throw ValidationError("shift_op: degree must be >= 1");
  OpMatrix t(degree + 1);
  for (std::size_t i = 1; i <= degree; ++i) t.set(i, i - 1, 1.0);
  return t;
}

OpMatrix backward_shift_op(std::size_t degree) { return adjoint(shift_op(degree)); }

OpMatrix multiplication_op(const CoeffVec& symbol, std::size_t degree) {
  OpMatrix t(degree + 1);
  for (std::size_t j = 0; j <= degree; ++j) {
    for (std::size_t i = j; i <= degree; ++i) t.set(i, j, symbol[i - j]);
  }
  return t;
}

OpMatrix diagonal_op(std::span<const cplx> diag) {
  OpMatrix t(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) t.set(i, i, diag[i]);
  return t;
}

OpMatrix random_op(std::size_t degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const std::size_t dim = degree + 1;
  std::vector<cplx> e(dim * dim);
  for (auto& v : e) {
    const double re = unit(rng);
    const double im = unit(rng);
    v = {re, im};
  }
  return OpMatrix(dim, std::move(e));
}

CoeffVec apply(const OpMatrix& t, const CoeffVec& f) {
  if (f.degree() + 1 > t.dim()) {
    throw ValidationError("apply: input degree " + std::to_string(f.degree()) + " exceeds operator degree " +
                          std::to_string(t.dim() - 1));
  }
  return apply_embedded(t, f);
}

CoeffVec apply_embedded(const OpMatrix& t, const CoeffVec& f) {
  std::vector<cplx> y(t.dim());
  const auto x = f.coeffs().first(std::min(f.size(), t.dim()));
  kernels::parallel::matvec(t.view(), x, y);
  return CoeffVec(std::move(y));
}

OpMatrix adjoint(const OpMatrix& t) {
  OpMatrix a(t.dim());
  for (std::size_t i = 0; i < t.dim(); ++i) {
    for (std::size_t j = 0; j < t.dim(); ++j) a.set(j, i, std::conj(t(i, j)));
  }
  return a;
}

OpMatrix compose(const OpMatrix& a, const OpMatrix& b) {
  if (a.dim() != b.dim()) throw ValidationError("compose: dimension mismatch");
  const std::size_t n = a.dim();
  OpMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < n; ++j) c.set(i, j, c(i, j) + aik * b(k, j));
    }
  }
  return c;
}

double operator_norm_estimate(const OpMatrix& t, double rel_tol, int max_iter) {
  const std::size_t n = t.dim();
  const OpMatrix ta = adjoint(t);
  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<cplx> v(n);
  for (auto& x : v) {
    const double re = unit(rng);
    const double im = unit(rng);
    x = {re, im};
  }
  std::vector<cplx> tv(n), w(n);
  auto normalize = [](std::vector<cplx>& x) {
    const double s = std::sqrt(kernels::parallel::norm_sq(x));
    if (s == 0.0) return false;
    for (auto& e : x) e /= s;
    return true;
  };
  if (!normalize(v)) return 0.0;
  double rho = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    kernels::parallel::matvec(t.view(), v, tv);
    const double next = kernels::parallel::norm_sq(tv);  // ⟨T*T v, v⟩
    kernels::parallel::matvec(ta.view(), tv, w);
    const bool converged = it > 0 && std::abs(next - rho) <= rel_tol * next;
    rho = next;
    if (converged) break;
    v.swap(w);
    if (!normalize(v)) return 0.0;
  }
  return std::sqrt(rho);
}

CoeffVec w_apply(const WnOperator& w, const CoeffVec& f) {
  if (w.n < 1) throw ValidationError("w_apply: n must be >= 1");
  if (f.degree() > w.in_degree) {
    throw ValidationError("w_apply: input degree " + std::to_string(f.degree()) + " exceeds W_n input degree " +
                          std::to_string(w.in_degree));
  }
  std::vector<cplx> out(w.out_degree() + 1);
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = f[j / w.n];
  return CoeffVec(std::move(out));
}

CoeffVec w_adjoint_apply(std::size_t n, const CoeffVec& g) {
  if (n < 1) throw ValidationError("w_adjoint_apply: n must be >= 1");
  std::vector<cplx> out(g.degree() / n + 1);
  for (std::size_t m = 0; m < out.size(); ++m) {
    cplx s{};
    for (std::size_t r = 0; r < n; ++r) s += g[m * n + r];
    out[m] = s;
  }
  return CoeffVec(std::move(out));
}

double semigroup_check(std::size_t m, std::size_t n, std::size_t degree) {
  if (m < 1 || n < 1) throw ValidationError("semigroup_check: m and n must be >= 1");
  const std::size_t d = degree / (m * n);
  std::vector<CoeffVec> battery;
  battery.push_back(CoeffVec::monomial(0, d));
  battery.push_back(CoeffVec::monomial(d, d));
  battery.push_back(CoeffVec(std::vector<cplx>(d + 1, cplx{1.0, 0.0})));
  std::mt19937_64 rng(m * 1000003u + n);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int b = 0; b < 3; ++b) {
    std::vector<cplx> c(d + 1);
    for (auto& v : c) {
      const double re = unit(rng);
      const double im = unit(rng);
      v = {re, im};
    }
    battery.emplace_back(std::move(c));
  }
  double worst = 0.0;
  for (const auto& f : battery) {
    const CoeffVec lhs = w_apply(m, w_apply(n, f));
    const CoeffVec rhs = w_apply(m * n, f);
    if (lhs.degree() != rhs.degree()) throw NumericalError("semigroup_check: degree mismatch");
    worst = std::max(worst, norm(lhs - rhs));
  }
  return worst;
}

namespace {

void require_truncation(const OpMatrix& t, const DiskPoint& p, const char* who) {
  const std::size_t need = truncation_degree(p.radius());
  if (need + 1 > t.dim()) {
    throw ValidationError(std::string(who) + ": operator dimension " + std::to_string(t.dim()) +
                          " too small for |lambda|=" + format_double(p.radius()) + " (need degree " +
                          std::to_string(need) + ")");
  }
}

}  // namespace

cplx berezin(const OpMatrix& t, const DiskPoint& lambda, const DiskPoint& mu) {
  require_truncation(t, lambda, "berezin");
  require_truncation(t, mu, "berezin");
  const std::size_t d = t.dim() - 1;
  return inner(apply(t, normalized_kernel(lambda, d)), normalized_kernel(mu, d));
}

BerezinChain berezin_chain(const OpMatrix& t, std::span<const DiskPoint> grid) {
  if (grid.empty()) throw ValidationError("berezin_chain: grid must be nonempty");
  for (const auto& p : grid) require_truncation(t, p, "berezin_chain");
  const std::size_t d = t.dim() - 1;
  const std::size_t g = grid.size();
  std::vector<CoeffVec> kh(g), tk(g);
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < g; ++i) {
    kh[i] = normalized_kernel(grid[i], d);
    tk[i] = apply(t, kh[i]);
  }
  std::vector<double> number(g), small(g), big(g);
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < g; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < g; ++j) {
      s = std::max(s, std::abs(kernels::serial::dot(tk[i].coeffs(), kh[j].coeffs())));
    }
    small[i] = s;
    number[i] = std::abs(kernels::serial::dot(tk[i].coeffs(), kh[i].coeffs()));
    big[i] = std::sqrt(kernels::serial::norm_sq(tk[i].coeffs()));
  }
  BerezinChain c;
  c.number = *std::max_element(number.begin(), number.end());
  c.small_norm = *std::max_element(small.begin(), small.end());
  c.big_norm = *std::max_element(big.begin(), big.end());
  c.norm = operator_norm_estimate(t);
  return c;
}

SweepReport berezin_norms(const OpMatrix& t, std::span<const DiskPoint> grid) {
  const BerezinChain c = berezin_chain(t, grid);
  SweepReport r("berezin", {"quantity", "value"});
  r.add_row({std::string("berezin_number"), c.number});
  r.add_row({std::string("small_berezin_norm"), c.small_norm});
  r.add_row({std::string("big_berezin_norm"), c.big_norm});
  r.add_row({std::string("norm_estimate"), c.norm});
  r.set_meta("D", static_cast<std::int64_t>(t.dim() - 1));
  r.set_meta("grid_points", static_cast<std::int64_t>(grid.size()));
  r.set_meta("norm_rel_tol", 1e-10);
  return r;
}

std::vector<DiskPoint> polar_grid(std::size_t n_radii, std::size_t n_angles, double rmax) {
  if (n_radii < 1 || n_angles < 1) throw ValidationError("polar_grid: counts must be positive");
  std::vector<DiskPoint> pts;
  pts.emplace_back(0.0, 0.0);
  for (std::size_t i = 1; i < n_radii; ++i) {
    const double r = rmax * static_cast<double>(i) / static_cast<double>(n_radii - 1);
    for (std::size_t j = 0; j < n_angles; ++j) {
      const double th = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_angles);
      pts.emplace_back(std::polar(r, th));
    }
  }
  return pts;
}

double max_radius_for_degree(std::size_t degree, double eps) {
  double lo = 0.0, hi = 1.0 - 1e-9;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (truncation_degree(mid, eps) <= degree) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  // margin so points built from polar coordinates stay inside
  return lo * (1.0 - 1e-9);
}

OperatorAction OperatorAction::matrix(OpMatrix t) {
  const std::size_t dim = t.dim();
  return {"matrix", dim, [t = std::move(t)](const CoeffVec& f) { return apply_embedded(t, f); }};
}

OperatorAction OperatorAction::identity() {
  return {"identity", 0, [](const CoeffVec& f) { return f; }};
}

OperatorAction OperatorAction::zero() {
  return {"zero", 0, [](const CoeffVec& f) { return CoeffVec::zeros(f.degree()); }};
}

OperatorAction OperatorAction::shift() {
  return {"shift", 0, [](const CoeffVec& f) {
            std::vector<cplx> c(f.size() + 1);
            std::copy(f.coeffs().begin(), f.coeffs().end(), c.begin() + 1);
            return CoeffVec(std::move(c));
          }};
}

OperatorAction OperatorAction::backward_shift() {
  return {"backshift", 0, [](const CoeffVec& f) {
            if (f.size() == 1) return CoeffVec::zeros(0);
            return CoeffVec(std::vector<cplx>(f.coeffs().begin() + 1, f.coeffs().end()));
          }};
}

OperatorAction OperatorAction::multiplication(CoeffVec symbol) {
  return {"mult", 0, [symbol = std::move(symbol)](const CoeffVec& f) {
            return poly_mul(f, symbol, f.degree() + symbol.degree());
          }};
}

SweepReport lemma1_sweep(const OperatorAction& t, const DiskPoint& mu, cplx direction, std::span<const double> radii) {
  if (std::abs(direction) == 0.0) throw ValidationError("lemma1_sweep: direction must be nonzero");
  const cplx zeta = direction / std::abs(direction);
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] >= 0.0 && radii[i] < 1.0)) throw ValidationError("lemma1_sweep: radii must lie in [0, 1)");
    if (i > 0 && !(radii[i] > radii[i - 1])) throw ValidationError("lemma1_sweep: radii must be increasing");
  }
  std::vector<double> values(radii.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const DiskPoint lambda = DiskPoint::near_boundary(radii[i] * zeta);
    const std::size_t d = std::max(truncation_degree(radii[i]), t.dim() == 0 ? 0 : t.dim() - 1);
    const CoeffVec tk = t(normalized_kernel(lambda, d));
    values[i] = std::abs(eval(tk, mu));
  }
  SweepReport r("lemma1", {"r", "value"});
  for (std::size_t i = 0; i < radii.size(); ++i) r.add_row({radii[i], values[i]});
  r.set_meta("operator_action", t.name());
  r.set_meta("operator_dim", static_cast<std::int64_t>(t.dim()));
  r.set_meta("mu", to_string(mu.value()));
  r.set_meta("direction", to_string(zeta));
  r.set_meta("truncation_eps", kTruncationEps);
  return r;
}

}  // namespace hardy
