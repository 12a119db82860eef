#pragma once

// The h_k family h_k(z) = (1/(1−z))·log((1 + z + ... + z^(k−1))/k), the
// spans N, M and M_d built from it, and least-squares machinery for
// distances and projections onto truncated spans.

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hardy/coeff_vec.hpp"
#include "hardy/report.hpp"

namespace hardy {

inline constexpr double kDefaultRankTol = 1e-10;
inline constexpr double kGramConditionLimit = 1e14;

/// H_0 = 0, H_n = 1 + 1/2 + ... + 1/n for n ≤ max_n (compensated summation).
std::vector<double> harmonic_numbers(std::size_t max_n);

struct HkFunction {
  std::size_t k = 2;
  CoeffVec coeffs;

  /// ĥ_k(n) = H_n − H_⌊n/k⌋ − log k.
  static double coefficient(std::size_t k, std::size_t n, std::span<const double> harmonic);
};

/// Coefficients of h_k up to degree D by the harmonic-number rule. Requires k ≥ 2, D ≥ k.
HkFunction h_k(std::size_t k, std::size_t degree);
/// Same function through formal series: poly_log(p_k/k) then div_one_minus_z.
CoeffVec h_k_series_oracle(std::size_t k, std::size_t degree);

enum class Family { M, Md, N, custom };
std::string to_string(Family f);
Family parse_family(const std::string& text);

/// How the M / M_d spanning set is listed. all_pairs enumerates every
/// h_k − h_ℓ with k < ℓ; star lists h_{k0} − h_ℓ for the smallest index k0,
/// which spans the same space with one vector per index.
enum class PairMode { all_pairs, star };

class SubspaceBasis {
 public:
  SubspaceBasis(Family family, std::size_t degree) : family_(family), degree_(degree) {}

  void add(CoeffVec v, std::string label);

  Family family() const { return family_; }
  std::size_t degree() const { return degree_; }
  std::size_t size() const { return vectors_.size(); }
  std::size_t max_index() const { return max_index_; }
  void set_max_index(std::size_t k) { max_index_ = k; }
  const std::vector<CoeffVec>& vectors() const { return vectors_; }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  Family family_;
  std::size_t degree_;
  std::size_t max_index_ = 0;
  std::vector<CoeffVec> vectors_;
  std::vector<std::string> labels_;
};

/// M: h_k − h_ℓ, 2 ≤ k < ℓ ≤ K. M_d: same with k, ℓ multiples of d.
/// N: h_k, 2 ≤ k ≤ K. Vectors padded to degree D.
SubspaceBasis build_basis(Family family, std::size_t K, std::size_t d, std::size_t degree,
                          PairMode mode = PairMode::all_pairs);

/// Orthogonal factorization A = Q R of the basis matrix (columns = basis
/// vectors), built incrementally by classical Gram–Schmidt with one
/// reorthogonalization pass. Singular values of R decide the effective rank;
/// projections use only the retained singular directions.
class GramSystem {
 public:
  explicit GramSystem(std::size_t degree, double rank_tol = kDefaultRankTol);
  explicit GramSystem(SubspaceBasis basis, double rank_tol = kDefaultRankTol);

  void append(const CoeffVec& v, std::string label);
  /// Appends only if the residual against the current span exceeds
  /// rel_threshold·‖v‖. Returns whether v was accepted.
  bool append_if_independent(const CoeffVec& v, std::string label, double rel_threshold);

  std::size_t degree() const { return basis_.degree(); }
  std::size_t size() const { return basis_.size(); }
  const SubspaceBasis& basis() const { return basis_; }
  double rank_tol() const { return rank_tol_; }
  std::size_t effective_rank() const { return rank_; }
  const std::vector<double>& singular_values() const { return sigma_; }
  /// σ_max/σ_min over retained singular values (1 for an empty span).
  double condition_estimate() const;
  double gram_condition() const;
  bool ill_conditioned() const { return gram_condition() > kGramConditionLimit; }
  bool rank_collapsed() const { return rank_ < basis_.size(); }

  CoeffVec project(const CoeffVec& f) const;
  double dist(const CoeffVec& f) const;
  /// f − project(f).
  CoeffVec residual(const CoeffVec& f) const;

 private:
  std::vector<cplx> padded(const CoeffVec& f) const;
  std::vector<cplx> orthogonalize(std::vector<cplx>& w) const;
  void refactor();
  std::vector<cplx> project_raw(std::span<const cplx> f) const;

  SubspaceBasis basis_;
  double rank_tol_;
  std::vector<std::vector<cplx>> q_;
  Eigen::MatrixXcd r_;
  Eigen::MatrixXcd u_rank_;
  std::vector<double> sigma_;
  std::size_t rank_ = 0;
};

double dist(const CoeffVec& f, const GramSystem& g);
CoeffVec project(const CoeffVec& f, const GramSystem& g);
/// k_{E,λ}: projection of k_λ onto the span. Truncation rule must hold at the basis degree.
CoeffVec subspace_kernel(const GramSystem& g, const DiskPoint& lambda);
/// k_λ − k_{E,λ}: kernel of the orthogonal complement within the degree-D space.
CoeffVec complement_kernel(const GramSystem& g, const DiskPoint& lambda);

/// 1 − z as a coefficient vector of the given degree (≥ 1).
CoeffVec one_minus_z(std::size_t degree);

struct ClosedFormCheck {
  double closed_form = 0.0;
  double direct = 0.0;
};

struct ComplexClosedFormCheck {
  cplx closed_form;
  cplx direct;
};

/// ‖k_λ − P_{1−z} k_λ‖: closed form versus numerical projection.
ClosedFormCheck eq4_check(const DiskPoint& lambda);
/// ‖k_λ − P_{1−z} k_λ‖ in closed form.
double complement_kernel_norm(cplx lambda);

/// (1/(1−λ))·log(ℓ·p_k(λ)/(k·p_ℓ(λ))) with p_k = 1 + z + ... + z^(k−1).
cplx log_quotient(std::size_t k, std::size_t l, cplx lambda);
/// ⟨h_k − h_ℓ, k̂⟩ where k̂ is the normalized complement kernel of span{1−z}:
/// closed form versus direct pairing of truncated coefficient vectors.
ComplexClosedFormCheck eq6_check(std::size_t k, std::size_t l, const DiskPoint& lambda);

struct BoundaryLimit {
  double analytic = 0.0;        // (ℓ − k)/2
  double extrapolated = 0.0;    // Richardson along λ = 1 − 2^−j, j = 4..20
  double final_magnitude = 0.0; // |log_quotient·sqrt(1−r²)/sqrt(|1+r|²(1−r²)+2r⁴)| at the last radius
};

inline constexpr int kLimitFirstLevel = 4;
inline constexpr int kLimitLastLevel = 20;

BoundaryLimit eq7_limit(std::size_t k, std::size_t l);
/// log_quotient at real λ = 1 − h without cancellation.
double log_quotient_near_one(std::size_t k, std::size_t l, double h);

struct NamedVector {
  std::string label;
  CoeffVec vec;
};

/// Rows (K, candidateLabel, dist, effectiveRank, condEstimate) for
/// K = 3..K_max over nested M_K spans. Empty candidates selects 1 − z and a
/// second direction extracted from the complement of M_{K_max} + span{1 − z}.
SweepReport codim_probe(std::size_t k_max, std::size_t degree, std::vector<NamedVector> candidates = {});

/// Unit vector orthogonal to M_K and to 1 − z: the first monomial residual
/// that survives projection, normalized.
CoeffVec complement_direction(std::size_t K, std::size_t degree);

/// Rows (K, targetLabel, dist, effectiveRank, condEstimate) for nested
/// family spans, K from the family minimum up to K_max.
SweepReport density_sequence(const std::vector<NamedVector>& targets, Family family, std::size_t k_max,
                             std::size_t degree);

}  // namespace hardy
