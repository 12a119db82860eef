#pragma once

// Inner loops shared by every module. Two implementations:
//
//   serial::   plain loops, the reference the tests compare against
//   parallel:: OpenMP versions used by the library
//
// Parallel reductions sum fixed-size chunks and then combine the chunk
// partials in index order, so results do not depend on the thread count.

#include <complex>
#include <cstddef>
#include <span>

namespace hardy::kernels {

using cplx = std::complex<double>;

/// Row-major dense matrix view.
struct MatrixView {
  std::span<const cplx> data;
  std::size_t rows = 0;
  std::size_t cols = 0;
  cplx operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

inline constexpr std::size_t kReductionChunk = 4096;

namespace serial {

/// Σ a[i]·conj(b[i]) over the common length.
cplx dot(std::span<const cplx> a, std::span<const cplx> b);
double norm_sq(std::span<const cplx> a);
/// y = M x; x shorter than M.cols is zero-padded.
void matvec(MatrixView m, std::span<const cplx> x, std::span<cplx> y);
/// out[j] = dot(v, cols[j]) for each column.
void multi_dot(std::span<const std::span<const cplx>> cols, std::span<const cplx> v,
               std::span<cplx> out);
/// v -= Σ_j coef[j]·cols[j]
void subtract_combination(std::span<const std::span<const cplx>> cols,
                          std::span<const cplx> coef, std::span<cplx> v);

}  // namespace serial

namespace parallel {

cplx dot(std::span<const cplx> a, std::span<const cplx> b);
double norm_sq(std::span<const cplx> a);
void matvec(MatrixView m, std::span<const cplx> x, std::span<cplx> y);
void multi_dot(std::span<const std::span<const cplx>> cols, std::span<const cplx> v,
               std::span<cplx> out);
void subtract_combination(std::span<const std::span<const cplx>> cols,
                          std::span<const cplx> coef, std::span<cplx> v);

}  // namespace parallel

}  // namespace hardy::kernels
