#include "hardy/noor.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hardy/hardy_core.hpp"
#include "hardy/kernels.hpp"

namespace hardy {

std::vector<double> harmonic_numbers(std::size_t max_n) {
  std::vector<double> h(max_n + 1);
  double sum = 0.0, comp = 0.0;  // Neumaier
  for (std::size_t n = 1; n <= max_n; ++n) {
    const double term = 1.0 / static_cast<double>(n);
    const double t = sum + term;
    if (std::abs(sum) >= term) {
      comp += (sum - t) + term;
    } else {
      comp += (term - t) + sum;
    }
    sum = t;
    h[n] = sum + comp;
  }
  return h;
}

double HkFunction::coefficient(std::size_t k, std::size_t n, std::span<const double> harmonic) {
  return harmonic[n] - harmonic[n / k] - std::log(static_cast<double>(k));
}

namespace {

CoeffVec hk_coeffs(std::size_t k, std::size_t degree, std::span<const double> harmonic) {
  std::vector<cplx> c(degree + 1);
  const double logk = std::log(static_cast<double>(k));
  for (std::size_t n = 0; n <= degree; ++n) c[n] = harmonic[n] - harmonic[n / k] - logk;
  return CoeffVec(std::move(c));
}

void check_hk_args(std::size_t k, std::size_t degree) {
  if (k < 2) throw ValidationError("h_k: k must be >= 2 (got " + std::to_string(k) + ")");
  if (degree < k) throw ValidationError("h_k: degree must be >= k");
}

std::string hk_label(std::size_t k) { return "h_" + std::to_string(k); }
std::string pair_label(std::size_t k, std::size_t l) { return hk_label(k) + "-" + hk_label(l); }

}  // namespace

HkFunction h_k(std::size_t k, std::size_t degree) {
  check_hk_args(k, degree);
  const auto harmonic = harmonic_numbers(degree);
  return {k, hk_coeffs(k, degree, harmonic)};
}

CoeffVec h_k_series_oracle(std::size_t k, std::size_t degree) {
  check_hk_args(k, degree);
  const CoeffVec pk_over_k(std::vector<cplx>(k, cplx{1.0 / static_cast<double>(k), 0.0}));
  return div_one_minus_z(poly_log(pk_over_k, degree));
}

std::string to_string(Family f) {
  switch (f) {
    case Family::M: return "M";
    case Family::Md: return "M_d";
    case Family::N: return "N";
    case Family::custom: return "custom";
  }
  return "custom";
}

Family parse_family(const std::string& text) {
  if (text == "M") return Family::M;
  if (text == "M_d" || text == "Md") return Family::Md;
  if (text == "N") return Family::N;
  if (text == "custom") return Family::custom;
  throw ValidationError("family: expected M, M_d or N (got '" + text + "')");
}

void SubspaceBasis::add(CoeffVec v, std::string label) {
  if (v.degree() != degree_) {
    throw ValidationError("SubspaceBasis: vector degree " + std::to_string(v.degree()) + " differs from basis degree " +
                          std::to_string(degree_));
  }
  vectors_.push_back(std::move(v));
  labels_.push_back(std::move(label));
}

SubspaceBasis build_basis(Family family, std::size_t K, std::size_t d, std::size_t degree, PairMode mode) {
  std::vector<std::size_t> indices;
  switch (family) {
    case Family::M:
      if (K < 3) throw ValidationError("build_basis: family M needs K >= 3");
      for (std::size_t k = 2; k <= K; ++k) indices.push_back(k);
      break;
    case Family::Md:
      if (d < 2) throw ValidationError("build_basis: family M_d needs d >= 2");
      for (std::size_t k = d; k <= K; k += d) indices.push_back(k);
      if (indices.size() < 2) throw ValidationError("build_basis: M_d needs at least two multiples of d up to K");
      break;
    case Family::N:
      if (K < 2) throw ValidationError("build_basis: family N needs K >= 2");
      for (std::size_t k = 2; k <= K; ++k) indices.push_back(k);
      break;
    case Family::custom:
      throw ValidationError("build_basis: custom bases are assembled directly");
  }
  if (degree < K) throw ValidationError("build_basis: degree must be >= K");
  const auto harmonic = harmonic_numbers(degree);
  std::vector<CoeffVec> h;
  h.reserve(indices.size());
  for (std::size_t k : indices) h.push_back(hk_coeffs(k, degree, harmonic));

  SubspaceBasis basis(family, degree);
  basis.set_max_index(K);
  if (family == Family::N) {
    for (std::size_t i = 0; i < indices.size(); ++i) basis.add(h[i], hk_label(indices[i]));
    return basis;
  }
  for (std::size_t i = 0; i < indices.size(); ++i) {
    for (std::size_t j = i + 1; j < indices.size(); ++j) {
      basis.add(h[i] - h[j], pair_label(indices[i], indices[j]));
    }
    if (mode == PairMode::star) break;
  }
  return basis;
}

// ---------------------------------------------------------------------------
// GramSystem

GramSystem::GramSystem(std::size_t degree, double rank_tol)
    : basis_(Family::custom, degree), rank_tol_(rank_tol), r_(0, 0) {
  if (!(rank_tol > 0.0 && rank_tol < 1.0)) throw ValidationError("GramSystem: rank_tol must lie in (0, 1)");
}

GramSystem::GramSystem(SubspaceBasis basis, double rank_tol) : GramSystem(basis.degree(), rank_tol) {
  basis_ = SubspaceBasis(basis.family(), basis.degree());
  basis_.set_max_index(basis.max_index());
  for (std::size_t i = 0; i < basis.size(); ++i) append(basis.vectors()[i], basis.labels()[i]);
}

std::vector<cplx> GramSystem::padded(const CoeffVec& f) const {
  std::vector<cplx> w(degree() + 1);
  const auto c = f.coeffs();
  std::copy_n(c.begin(), std::min(c.size(), w.size()), w.begin());
  return w;
}

std::vector<cplx> GramSystem::orthogonalize(std::vector<cplx>& w) const {
  std::vector<cplx> total(q_.size());
  if (q_.empty()) return total;
  std::vector<std::span<const cplx>> cols(q_.begin(), q_.end());
  std::vector<cplx> c(q_.size());
  for (int pass = 0; pass < 2; ++pass) {
    kernels::parallel::multi_dot(cols, w, c);
    kernels::parallel::subtract_combination(cols, c, w);
    for (std::size_t j = 0; j < c.size(); ++j) total[j] += c[j];
  }
  return total;
}

void GramSystem::append(const CoeffVec& v, std::string label) {
  std::vector<cplx> w = padded(v);
  const double vnorm = std::sqrt(kernels::parallel::norm_sq(w));
  const std::vector<cplx> coef = orthogonalize(w);
  double rho = std::sqrt(kernels::parallel::norm_sq(w));
  // residual at rounding level: the column lies in the current span
  if (rho <= 1e-13 * vnorm) rho = 0.0;
  if (rho > 0.0) {
    for (auto& x : w) x /= rho;
  } else {
    std::fill(w.begin(), w.end(), cplx{});
  }
  const auto k = static_cast<Eigen::Index>(q_.size());
  Eigen::MatrixXcd grown = Eigen::MatrixXcd::Zero(k + 1, k + 1);
  grown.topLeftCorner(k, k) = r_;
  for (Eigen::Index i = 0; i < k; ++i) grown(i, k) = coef[static_cast<std::size_t>(i)];
  grown(k, k) = rho;
  r_ = std::move(grown);
  q_.push_back(std::move(w));
  basis_.add(v.resized(degree()), std::move(label));
  refactor();
}

bool GramSystem::append_if_independent(const CoeffVec& v, std::string label, double rel_threshold) {
  std::vector<cplx> w = padded(v);
  const double vnorm = std::sqrt(kernels::parallel::norm_sq(w));
  if (vnorm == 0.0) return false;
  const std::vector<cplx> res = padded(residual(v));
  const double rnorm = std::sqrt(kernels::parallel::norm_sq(res));
  if (rnorm <= rel_threshold * vnorm) return false;
  append(v, std::move(label));
  return true;
}

void GramSystem::refactor() {
  const auto k = r_.cols();
  sigma_.clear();
  rank_ = 0;
  if (k == 0) {
    u_rank_.resize(0, 0);
    return;
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(r_, Eigen::ComputeFullU);
  const auto& s = svd.singularValues();
  for (Eigen::Index i = 0; i < s.size(); ++i) sigma_.push_back(s(i));
  const double smax = sigma_.empty() ? 0.0 : sigma_.front();
  if (smax > 0.0) {
    for (double sv : sigma_) {
      if (sv > rank_tol_ * smax) ++rank_;
    }
  }
  u_rank_ = svd.matrixU().leftCols(static_cast<Eigen::Index>(rank_));
}

double GramSystem::condition_estimate() const {
  if (rank_ == 0) return 1.0;
  return sigma_.front() / sigma_[rank_ - 1];
}

double GramSystem::gram_condition() const {
  const double c = condition_estimate();
  return c * c;
}

std::vector<cplx> GramSystem::project_raw(std::span<const cplx> f) const {
  std::vector<cplx> out(degree() + 1);
  if (rank_ == 0) return out;
  std::vector<std::span<const cplx>> cols(q_.begin(), q_.end());
  std::vector<cplx> c(q_.size());
  kernels::parallel::multi_dot(cols, f, c);  // c = Q^H f
  Eigen::Map<const Eigen::VectorXcd> cv(c.data(), static_cast<Eigen::Index>(c.size()));
  const Eigen::VectorXcd y = u_rank_ * (u_rank_.adjoint() * cv);
  std::vector<cplx> coef(y.data(), y.data() + y.size());
  // out = Q y, written as 0 − (−Q y)
  for (auto& v : coef) v = -v;
  kernels::parallel::subtract_combination(cols, coef, out);
  return out;
}

CoeffVec GramSystem::project(const CoeffVec& f) const { return CoeffVec(project_raw(padded(f))); }

CoeffVec GramSystem::residual(const CoeffVec& f) const {
  std::vector<cplx> w = padded(f);
  const std::vector<cplx> p = project_raw(w);
  for (std::size_t i = 0; i < w.size(); ++i) w[i] -= p[i];
  return CoeffVec(std::move(w));
}

double GramSystem::dist(const CoeffVec& f) const { return norm(residual(f)); }

double dist(const CoeffVec& f, const GramSystem& g) { return g.dist(f); }
CoeffVec project(const CoeffVec& f, const GramSystem& g) { return g.project(f); }

namespace {

void require_kernel_truncation(const GramSystem& g, const DiskPoint& lambda) {
  const std::size_t need = truncation_degree(lambda.radius());
  if (g.degree() < need) {
    throw ValidationError("subspace kernel: basis degree " + std::to_string(g.degree()) + " below truncation rule " +
                          std::to_string(need) + " at |lambda|=" + format_double(lambda.radius()));
  }
}

}  // namespace

CoeffVec subspace_kernel(const GramSystem& g, const DiskPoint& lambda) {
  require_kernel_truncation(g, lambda);
  return g.project(kernel_vec(lambda, g.degree()));
}

CoeffVec complement_kernel(const GramSystem& g, const DiskPoint& lambda) {
  require_kernel_truncation(g, lambda);
  return g.residual(kernel_vec(lambda, g.degree()));
}

CoeffVec one_minus_z(std::size_t degree) {
  if (degree < 1) throw ValidationError("one_minus_z: degree must be >= 1");
  std::vector<cplx> c(degree + 1);
  c[0] = 1.0;
  c[1] = -1.0;
  return CoeffVec(std::move(c));
}

// ---------------------------------------------------------------------------
// Closed forms for the complement of span{1 − z}

double complement_kernel_norm(cplx lambda) {
  const double r2 = std::norm(lambda);
  const double s = std::norm(1.0 + lambda) * (1.0 - r2) + 2.0 * r2 * r2;
  return (std::numbers::sqrt2 / 2.0) * std::sqrt(s) / std::sqrt(1.0 - r2);
}

ClosedFormCheck eq4_check(const DiskPoint& lambda) {
  const std::size_t degree = std::max<std::size_t>(truncation_degree(lambda.radius()), 1);
  GramSystem line(degree);
  line.append(one_minus_z(degree), "1-z");
  return {complement_kernel_norm(lambda.value()), norm(complement_kernel(line, lambda))};
}

cplx log_quotient(std::size_t k, std::size_t l, cplx lambda) {
  if (k < 2 || l < 2) throw ValidationError("log_quotient: k and l must be >= 2");
  if (std::abs(1.0 - lambda) < 1e-12) throw ValidationError("log_quotient: lambda = 1 is a removable singularity");
  // log p_k = Log(1 − λ^k) − Log(1 − λ); both principal logs are analytic in the disk
  const cplx lk = std::log(1.0 - std::pow(lambda, static_cast<double>(k)));
  const cplx ll = std::log(1.0 - std::pow(lambda, static_cast<double>(l)));
  const cplx logq = std::log(static_cast<double>(l) / static_cast<double>(k)) + lk - ll;
  return logq / (1.0 - lambda);
}

ComplexClosedFormCheck eq6_check(std::size_t k, std::size_t l, const DiskPoint& lambda) {
  const cplx lam = lambda.value();
  if (std::abs(1.0 - lam) < 1e-12) throw ValidationError("eq6_check: lambda = 1 excluded (see eq7_limit)");
  const double r2 = std::norm(lam);
  const double s = std::norm(1.0 + lam) * (1.0 - r2) + 2.0 * r2 * r2;
  const cplx closed = std::numbers::sqrt2 * log_quotient(k, l, lam) * std::sqrt(1.0 - r2) / std::sqrt(s);

  const std::size_t degree = std::max({truncation_degree(lambda.radius()), 2 * std::max(k, l), std::size_t{16}});
  GramSystem line(degree);
  line.append(one_minus_z(degree), "1-z");
  const CoeffVec km = complement_kernel(line, lambda);
  const CoeffVec unit = cplx(1.0 / norm(km)) * km;
  const auto harmonic = harmonic_numbers(degree);
  const CoeffVec diff = hk_coeffs(k, degree, harmonic) - hk_coeffs(l, degree, harmonic);
  return {closed, inner(diff, unit)};
}

double log_quotient_near_one(std::size_t k, std::size_t l, double h) {
  // log(p_k(1−h)/k) = log1p((1/k) Σ_{i<k} ((1−h)^i − 1))
  const double lh = std::log1p(-h);
  auto log_pk_over_k = [&](std::size_t m) {
    double s = 0.0;
    for (std::size_t i = 1; i < m; ++i) s += std::expm1(static_cast<double>(i) * lh);
    return std::log1p(s / static_cast<double>(m));
  };
  return (log_pk_over_k(k) - log_pk_over_k(l)) / h;
}

BoundaryLimit eq7_limit(std::size_t k, std::size_t l) {
  if (k < 2 || l < 2) throw ValidationError("eq7_limit: k and l must be >= 2");
  BoundaryLimit out;
  out.analytic = (static_cast<double>(l) - static_cast<double>(k)) / 2.0;
  // Neville table in h with h halving; the expansion has all integer powers
  const int levels = kLimitLastLevel - kLimitFirstLevel + 1;
  std::vector<std::vector<double>> t(levels);
  for (int i = 0; i < levels; ++i) {
    const double h = std::ldexp(1.0, -(kLimitFirstLevel + i));
    t[i].push_back(log_quotient_near_one(k, l, h));
    for (int m = 1; m <= i; ++m) {
      const double factor = std::ldexp(1.0, m) - 1.0;
      t[i].push_back(t[i][m - 1] + (t[i][m - 1] - t[i - 1][m - 1]) / factor);
    }
  }
  out.extrapolated = t.back().back();
  const double h = std::ldexp(1.0, -kLimitLastLevel);
  const double r = 1.0 - h;
  const double one_minus_r2 = h * (2.0 - h);
  const double s = (1.0 + r) * (1.0 + r) * one_minus_r2 + 2.0 * r * r * r * r;
  out.final_magnitude = std::abs(log_quotient_near_one(k, l, h) * std::sqrt(one_minus_r2) / std::sqrt(s));
  return out;
}

// ---------------------------------------------------------------------------
// Probes

CoeffVec complement_direction(std::size_t K, std::size_t degree) {
  GramSystem g(build_basis(Family::M, K, 0, degree, PairMode::star));
  g.append(one_minus_z(degree), "1-z");
  for (std::size_t j = 0; j <= degree; ++j) {
    const CoeffVec res = g.residual(CoeffVec::monomial(j, degree));
    const double rn = norm(res);
    if (rn > 1e-6) return cplx(1.0 / rn) * res;
  }
  throw NumericalError("complement_direction: span fills the truncated space");
}

namespace {

void add_probe_row(SweepReport& report, std::size_t K, const NamedVector& target, const GramSystem& g,
                   std::int64_t& ill_rows, std::int64_t& collapsed_rows) {
  report.add_row({static_cast<std::int64_t>(K), target.label, g.dist(target.vec),
                  static_cast<std::int64_t>(g.effective_rank()), g.gram_condition()});
  if (g.ill_conditioned()) ++ill_rows;
  if (g.rank_collapsed()) ++collapsed_rows;
}

void probe_metadata(SweepReport& r, std::size_t degree, std::size_t kmin, std::size_t kmax, std::int64_t ill,
                    std::int64_t collapsed) {
  r.set_meta("D", static_cast<std::int64_t>(degree));
  r.set_meta("K_min", static_cast<std::int64_t>(kmin));
  r.set_meta("K_max", static_cast<std::int64_t>(kmax));
  r.set_meta("rankTol", kDefaultRankTol);
  r.set_meta("gram_condition_limit", kGramConditionLimit);
  r.set_meta("pair_mode", std::string("star"));
  r.set_meta("ill_conditioned_rows", ill);
  r.set_meta("rank_collapsed_rows", collapsed);
}

}  // namespace

SweepReport codim_probe(std::size_t k_max, std::size_t degree, std::vector<NamedVector> candidates) {
  if (k_max < 3) throw ValidationError("codim_probe: K must be >= 3");
  if (degree < k_max) throw ValidationError("codim_probe: degree must be >= K");
  if (candidates.empty()) {
    candidates.push_back({"1-z", one_minus_z(degree)});
    candidates.push_back({"complement", complement_direction(k_max, degree)});
  }
  const auto harmonic = harmonic_numbers(degree);
  const CoeffVec h2 = hk_coeffs(2, degree, harmonic);
  GramSystem g(degree);
  SweepReport report("codim-probe", {"K", "candidateLabel", "dist", "effectiveRank", "condEstimate"});
  std::int64_t ill = 0, collapsed = 0;
  for (std::size_t K = 3; K <= k_max; ++K) {
    g.append(h2 - hk_coeffs(K, degree, harmonic), pair_label(2, K));
    for (const auto& c : candidates) add_probe_row(report, K, c, g, ill, collapsed);
  }
  probe_metadata(report, degree, 3, k_max, ill, collapsed);
  return report;
}

SweepReport density_sequence(const std::vector<NamedVector>& targets, Family family, std::size_t k_max,
                             std::size_t degree) {
  if (k_max < 3) throw ValidationError("density_sequence: Kmax must be >= 3");
  if (family != Family::N && family != Family::M) throw ValidationError("density_sequence: family must be N or M");
  if (degree < k_max) throw ValidationError("density_sequence: degree must be >= Kmax");
  const auto harmonic = harmonic_numbers(degree);
  const CoeffVec h2 = hk_coeffs(2, degree, harmonic);
  GramSystem g(degree);
  SweepReport report("density-probe", {"K", "targetLabel", "dist", "effectiveRank", "condEstimate"});
  std::int64_t ill = 0, collapsed = 0;
  const std::size_t kmin = family == Family::N ? 2 : 3;
  if (family == Family::N) g.append(h2, hk_label(2));
  for (std::size_t K = kmin; K <= k_max; ++K) {
    if (K > 2) {
      if (family == Family::N) {
        g.append(hk_coeffs(K, degree, harmonic), hk_label(K));
      } else {
        g.append(h2 - hk_coeffs(K, degree, harmonic), pair_label(2, K));
      }
    }
    for (const auto& t : targets) add_probe_row(report, K, t, g, ill, collapsed);
  }
  probe_metadata(report, degree, kmin, k_max, ill, collapsed);
  report.set_meta("family", to_string(family));
  return report;
}

}  // namespace hardy
