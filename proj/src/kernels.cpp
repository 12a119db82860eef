#include "hardy/kernels.hpp"

#include <algorithm>
#include <vector>

#include <omp.h>

namespace hardy::kernels {

namespace serial {

cplx dot(std::span<const cplx> a, std::span<const cplx> b) {
  const std::size_t n = std::min(a.size(), b.size());
  cplx s{};
  for (std::size_t i = 0; i < n; ++i) s += a[i] * std::conj(b[i]);
  return s;
}

double norm_sq(std::span<const cplx> a) {
  double s = 0.0;
  for (const auto& v : a) s += std::norm(v);
  return s;
}

void matvec(MatrixView m, std::span<const cplx> x, std::span<cplx> y) {
  const std::size_t nx = std::min(x.size(), m.cols);
  for (std::size_t i = 0; i < m.rows; ++i) {
    cplx s{};
    for (std::size_t j = 0; j < nx; ++j) s += m(i, j) * x[j];
    y[i] = s;
  }
}

void multi_dot(std::span<const std::span<const cplx>> cols, std::span<const cplx> v,
               std::span<cplx> out) {
  for (std::size_t j = 0; j < cols.size(); ++j) out[j] = dot(v, cols[j]);
}

void subtract_combination(std::span<const std::span<const cplx>> cols,
                          std::span<const cplx> coef, std::span<cplx> v) {
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const std::size_t n = std::min(v.size(), cols[j].size());
    for (std::size_t i = 0; i < n; ++i) v[i] -= coef[j] * cols[j][i];
  }
}

}  // namespace serial

namespace parallel {

namespace {

std::size_t chunk_count(std::size_t n) { return (n + kReductionChunk - 1) / kReductionChunk; }

}  // namespace

cplx dot(std::span<const cplx> a, std::span<const cplx> b) {
  const std::size_t n = std::min(a.size(), b.size());
  const std::size_t chunks = chunk_count(n);
  if (chunks <= 1) return serial::dot(a.first(n), b.first(n));
  std::vector<cplx> partial(chunks);
#pragma omp parallel for schedule(static)
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t lo = c * kReductionChunk;
    const std::size_t hi = std::min(n, lo + kReductionChunk);
    cplx s{};
    for (std::size_t i = lo; i < hi; ++i) s += a[i] * std::conj(b[i]);
    partial[c] = s;
  }
  cplx s{};
  for (const auto& p : partial) s += p;
  return s;
}

double norm_sq(std::span<const cplx> a) {
  const std::size_t chunks = chunk_count(a.size());
  if (chunks <= 1) return serial::norm_sq(a);
  std::vector<double> partial(chunks);
#pragma omp parallel for schedule(static)
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t lo = c * kReductionChunk;
    const std::size_t hi = std::min(a.size(), lo + kReductionChunk);
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += std::norm(a[i]);
    partial[c] = s;
  }
  double s = 0.0;
  for (double p : partial) s += p;
  return s;
}

void matvec(MatrixView m, std::span<const cplx> x, std::span<cplx> y) {
  const std::size_t nx = std::min(x.size(), m.cols);
#pragma omp parallel for schedule(static) if (m.rows * nx > 16384)
  for (std::size_t i = 0; i < m.rows; ++i) {
    cplx s{};
    for (std::size_t j = 0; j < nx; ++j) s += m(i, j) * x[j];
    y[i] = s;
  }
}

void multi_dot(std::span<const std::span<const cplx>> cols, std::span<const cplx> v,
               std::span<cplx> out) {
  const std::size_t k = cols.size();
  if (k == 0) return;
  std::size_t n = v.size();
  for (const auto& c : cols) n = std::min(n, c.size());
  const std::size_t chunks = chunk_count(n);
  // partial[c * k + j] holds chunk c of column j
  std::vector<cplx> partial(std::max<std::size_t>(chunks, 1) * k);
#pragma omp parallel for schedule(static) if (chunks > 1)
  for (std::size_t c = 0; c < std::max<std::size_t>(chunks, 1); ++c) {
    const std::size_t lo = c * kReductionChunk;
    const std::size_t hi = std::min(n, lo + kReductionChunk);
    for (std::size_t j = 0; j < k; ++j) {
      cplx s{};
      const auto& col = cols[j];
      for (std::size_t i = lo; i < hi; ++i) s += v[i] * std::conj(col[i]);
      partial[c * k + j] = s;
    }
  }
  for (std::size_t j = 0; j < k; ++j) {
    cplx s{};
    for (std::size_t c = 0; c < std::max<std::size_t>(chunks, 1); ++c) s += partial[c * k + j];
    out[j] = s;
  }
}

void subtract_combination(std::span<const std::span<const cplx>> cols,
                          std::span<const cplx> coef, std::span<cplx> v) {
  if (cols.empty()) return;
  const auto n = static_cast<std::ptrdiff_t>(v.size());
#pragma omp parallel for schedule(static) if (n * static_cast<std::ptrdiff_t>(cols.size()) > 16384)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    cplx s{};
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (ui < cols[j].size()) s += coef[j] * cols[j][ui];
    }
    v[ui] -= s;
  }
}

}  // namespace parallel

}  // namespace hardy::kernels
