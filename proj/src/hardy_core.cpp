#include "hardy/hardy_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hardy/kernels.hpp"

namespace hardy {

cplx inner(const CoeffVec& f, const CoeffVec& g) {
  return kernels::parallel::dot(f.coeffs(), g.coeffs());
}

double norm(const CoeffVec& f) { return std::sqrt(kernels::parallel::norm_sq(f.coeffs())); }

cplx eval(const CoeffVec& f, const DiskPoint& p) {
  const auto c = f.coeffs();
  const cplx z = p.value();
  cplx acc{};
  for (std::size_t n = c.size(); n-- > 0;) acc = acc * z + c[n];
  return acc;
}

std::size_t truncation_degree(double radius, double eps) {
  if (!(radius >= 0.0 && radius < 1.0)) throw ValidationError("truncation_degree: radius must lie in [0, 1)");
  if (!(eps > 0.0)) throw ValidationError("truncation_degree: eps must be positive");
  if (radius == 0.0) return 0;
  const double scale = std::sqrt((1.0 - radius) * (1.0 + radius));
  // r^(D+1) ≤ eps·sqrt(1−r²)
  const double target = std::log(eps * scale);
  double guess = std::ceil(target / std::log(radius)) - 1.0;
  if (guess < 0.0) guess = 0.0;
  auto d = static_cast<std::size_t>(guess);
  auto ok = [&](std::size_t deg) {
    return static_cast<double>(deg + 1) * std::log(radius) <= target;
  };
  while (d > 0 && ok(d - 1)) --d;
  while (!ok(d)) ++d;
  return d;
}

CoeffVec kernel_vec(const DiskPoint& p, std::size_t degree) {
  std::vector<cplx> c(degree + 1);
  const cplx w = std::conj(p.value());
  cplx power{1.0, 0.0};
  for (std::size_t n = 0; n <= degree; ++n) {
    c[n] = power;
    power *= w;
    // underflow to subnormals is harmless but slow
    if (std::abs(power) < 1e-300) power = 0.0;
  }
  return CoeffVec(std::move(c));
}

CoeffVec normalized_kernel(const DiskPoint& p, std::size_t degree) {
  const std::size_t needed = truncation_degree(p.radius());
  if (degree < needed) {
    throw ValidationError("normalized_kernel: degree " + std::to_string(degree) +
                          " below truncation rule (need " + std::to_string(needed) + " at |lambda|=" +
                          std::to_string(p.radius()) + ")");
  }
  const CoeffVec k = kernel_vec(p, degree);
  return cplx(1.0 / norm(k)) * k;
}

CoeffVec poly_mul(const CoeffVec& f, const CoeffVec& g, std::size_t degree) {
  std::vector<cplx> c(degree + 1);
  const auto a = f.coeffs();
  const auto b = g.coeffs();
  for (std::size_t i = 0; i < a.size() && i <= degree; ++i) {
    if (a[i] == cplx{}) continue;
    const std::size_t jmax = std::min(b.size() - 1, degree - i);
    for (std::size_t j = 0; j <= jmax; ++j) c[i + j] += a[i] * b[j];
  }
  return CoeffVec(std::move(c));
}

CoeffVec div_one_minus_z(const CoeffVec& f) {
  std::vector<cplx> c(f.coeffs().begin(), f.coeffs().end());
  for (std::size_t n = 1; n < c.size(); ++n) c[n] += c[n - 1];
  return CoeffVec(std::move(c));
}

namespace {

// Index of the last nonzero coefficient (0 for the zero vector).
std::size_t effective_degree(std::span<const cplx> c) {
  std::size_t d = c.size() - 1;
  while (d > 0 && c[d] == cplx{}) --d;
  return d;
}

}  // namespace

CoeffVec poly_log(const CoeffVec& f, std::size_t degree) {
  const cplx f0 = f[0];
  if (std::abs(f0) <= 1e-14) throw ValidationError("poly_log: constant coefficient is zero (log singularity)");
  // u = f/f0 has u0 = 1; g_n = u_n − (1/n) Σ_{i=1}^{n−1} (n−i)·g_{n−i}·u_i
  std::vector<cplx> u(f.coeffs().begin(), f.coeffs().end());
  for (auto& v : u) v /= f0;
  const std::size_t du = effective_degree(u);
  std::vector<cplx> g(degree + 1);
  g[0] = std::log(f0);
  for (std::size_t n = 1; n <= degree; ++n) {
    cplx s{};
    const std::size_t imax = std::min(n - 1, du);
    for (std::size_t i = 1; i <= imax; ++i) s += static_cast<double>(n - i) * g[n - i] * u[i];
    const cplx un = n <= du ? u[n] : cplx{};
    g[n] = un - s / static_cast<double>(n);
  }
  return CoeffVec(std::move(g));
}

CoeffVec poly_exp(const CoeffVec& g, std::size_t degree) {
  // n·u_n = Σ_{j=1}^{n} j·g_j·u_{n−j}
  const auto gc = g.coeffs();
  const std::size_t dg = effective_degree(gc);
  std::vector<cplx> u(degree + 1);
  u[0] = std::exp(gc[0]);
  for (std::size_t n = 1; n <= degree; ++n) {
    cplx s{};
    const std::size_t jmax = std::min(n, dg);
    for (std::size_t j = 1; j <= jmax; ++j) s += static_cast<double>(j) * gc[j] * u[n - j];
    u[n] = s / static_cast<double>(n);
  }
  return CoeffVec(std::move(u));
}

}  // namespace hardy
