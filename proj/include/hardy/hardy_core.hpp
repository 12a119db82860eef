#pragma once

// Coefficient-space model of H²: the monomials z^n form an orthonormal
// basis, so f ↦ (f̂(n)) is an isometry onto ℓ².

#include <cstddef>

#include "hardy/coeff_vec.hpp"

namespace hardy {

inline constexpr double kTruncationEps = 1e-12;

/// ⟨f, g⟩ = Σ f̂(n)·conj(ĝ(n)); the shorter vector is zero-padded.
cplx inner(const CoeffVec& f, const CoeffVec& g);
double norm(const CoeffVec& f);

/// Horner evaluation of the truncated series at λ.
cplx eval(const CoeffVec& f, const DiskPoint& p);

/// Smallest D with r^(D+1)/sqrt(1−r²) ≤ eps, i.e. the ℓ² tail of k̂_λ
/// beyond degree D is at most eps.
std::size_t truncation_degree(double radius, double eps = kTruncationEps);

/// Reproducing kernel k_λ truncated at degree D: entries conj(λ)^n.
CoeffVec kernel_vec(const DiskPoint& p, std::size_t degree);

/// k_λ/‖k_λ‖. Throws if degree is below truncation_degree(|λ|).
CoeffVec normalized_kernel(const DiskPoint& p, std::size_t degree);

/// Cauchy product truncated at the given degree.
CoeffVec poly_mul(const CoeffVec& f, const CoeffVec& g, std::size_t degree);

/// Multiply by 1/(1−z): running sums of the coefficients.
CoeffVec div_one_minus_z(const CoeffVec& f);

/// Formal logarithm up to the given degree via the recurrence from
/// f·(log f)′ = f′. The constant term is the principal log of f̂(0).
/// Throws if |f̂(0)| ≤ 1e−14.
CoeffVec poly_log(const CoeffVec& f, std::size_t degree);

/// Formal exponential (inverse of poly_log) up to the given degree.
CoeffVec poly_exp(const CoeffVec& g, std::size_t degree);

}  // namespace hardy
