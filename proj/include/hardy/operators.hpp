#pragma once

// Truncated bounded operators on H² in the monomial basis, the weighted
// composition semigroup W_n f = (1 + z + ... + z^(n−1))·f(z^n), and
// Berezin symbols.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hardy/coeff_vec.hpp"
#include "hardy/kernels.hpp"
#include "hardy/report.hpp"

namespace hardy {

/// Dense (dim × dim) matrix; entry (i, j) = ⟨T z^j, z^i⟩.
///
/// On vectors longer than dim it acts as P T P, P the projection onto
/// polynomials of degree < dim (see apply_embedded).
class OpMatrix {
 public:
  OpMatrix() = default;
  explicit OpMatrix(std::size_t dim);
  OpMatrix(std::size_t dim, std::vector<cplx> row_major);

  std::size_t dim() const { return dim_; }
  cplx operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  void set(std::size_t i, std::size_t j, cplx v) { entries_[i * dim_ + j] = v; }
  std::span<const cplx> entries() const { return entries_; }
  kernels::MatrixView view() const { return {entries_, dim_, dim_}; }

  friend bool operator==(const OpMatrix&, const OpMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<cplx> entries_;
};

OpMatrix identity_op(std::size_t degree);
/// Multiplication by z, truncated: the top coefficient is dropped.
OpMatrix shift_op(std::size_t degree);
OpMatrix backward_shift_op(std::size_t degree);
/// Multiplication by the polynomial φ (lower-triangular Toeplitz), truncated.
OpMatrix multiplication_op(const CoeffVec& symbol, std::size_t degree);
OpMatrix diagonal_op(std::span<const cplx> diag);
/// Entries with real and imaginary parts uniform in [−1, 1], seeded.
OpMatrix random_op(std::size_t degree, std::uint64_t seed);

/// T f for f.degree ≤ T.dim − 1; result has degree T.dim − 1.
CoeffVec apply(const OpMatrix& t, const CoeffVec& f);
/// (P T P) f for any f: the leading T.dim coefficients go through T, the
/// rest is discarded.
CoeffVec apply_embedded(const OpMatrix& t, const CoeffVec& f);
OpMatrix adjoint(const OpMatrix& t);
OpMatrix compose(const OpMatrix& a, const OpMatrix& b);

/// ‖T‖ via power iteration on T*T (relative tolerance 1e−10, at most 10⁴ steps).
double operator_norm_estimate(const OpMatrix& t, double rel_tol = 1e-10, int max_iter = 10000);

/// W_n restricted to inputs of degree ≤ in_degree. Applied by index maps.
struct WnOperator {
  std::size_t n = 1;
  std::size_t in_degree = 0;
  std::size_t out_degree() const { return n * in_degree + n - 1; }
};

/// (W_n f)^(j) = f̂(⌊j/n⌋) for j ≤ n·in_degree + n − 1.
CoeffVec w_apply(const WnOperator& w, const CoeffVec& f);
inline CoeffVec w_apply(std::size_t n, const CoeffVec& f) { return w_apply(WnOperator{n, f.degree()}, f); }
/// (W_n* g)^(m) = Σ_{r<n} ĝ(mn + r); result degree ⌊g.degree/n⌋.
CoeffVec w_adjoint_apply(std::size_t n, const CoeffVec& g);

/// max over a fixed test battery of ‖W_m(W_n f) − W_{mn} f‖, inputs of
/// degree ≤ ⌊D/(mn)⌋.
double semigroup_check(std::size_t m, std::size_t n, std::size_t degree);

/// ⟨T k̂_λ, k̂_μ⟩; μ = λ gives the ordinary Berezin symbol. Both points must
/// satisfy the truncation rule at T.dim − 1.
cplx berezin(const OpMatrix& t, const DiskPoint& lambda, const DiskPoint& mu);
inline cplx berezin(const OpMatrix& t, const DiskPoint& lambda) { return berezin(t, lambda, lambda); }

struct BerezinChain {
  double number = 0.0;      // sup |T̃(λ)|
  double small_norm = 0.0;  // sup |T̃(λ, μ)| over grid pairs
  double big_norm = 0.0;    // sup ‖T k̂_λ‖
  double norm = 0.0;        // operator norm estimate
};

BerezinChain berezin_chain(const OpMatrix& t, std::span<const DiskPoint> grid);
/// Rows (quantity, value) for the four chain quantities.
SweepReport berezin_norms(const OpMatrix& t, std::span<const DiskPoint> grid);

/// A bounded operator given by its action on vectors of any degree. The
/// structured forms act exactly (no truncation edge); matrix acts as P T P.
class OperatorAction {
 public:
  static OperatorAction matrix(OpMatrix t);
  static OperatorAction identity();
  static OperatorAction zero();
  static OperatorAction shift();
  static OperatorAction backward_shift();
  static OperatorAction multiplication(CoeffVec symbol);

  CoeffVec operator()(const CoeffVec& f) const { return act_(f); }
  const std::string& name() const { return name_; }
  /// Matrix dimension, 0 for the structured forms.
  std::size_t dim() const { return dim_; }

 private:
  OperatorAction(std::string name, std::size_t dim, std::function<CoeffVec(const CoeffVec&)> act)
      : name_(std::move(name)), dim_(dim), act_(std::move(act)) {}

  std::string name_;
  std::size_t dim_ = 0;
  std::function<CoeffVec(const CoeffVec&)> act_;
};

/// Polar grid: radii rmax·i/(nr − 1), angles 2πj/nθ; the origin appears once.
std::vector<DiskPoint> polar_grid(std::size_t n_radii, std::size_t n_angles, double rmax);
/// Largest radius whose truncation degree fits in the given degree.
double max_radius_for_degree(std::size_t degree, double eps = 1e-12);

/// |(T k̂_{rζ})(μ)| for each radius, k̂ truncated per radius. Rows (r, value);
/// radii must be increasing in [0, 1).
SweepReport lemma1_sweep(const OperatorAction& t, const DiskPoint& mu, cplx direction,
                         std::span<const double> radii);
inline SweepReport lemma1_sweep(const OpMatrix& t, const DiskPoint& mu, cplx direction,
                                std::span<const double> radii) {
  return lemma1_sweep(OperatorAction::matrix(t), mu, direction, radii);
}

}  // namespace hardy
