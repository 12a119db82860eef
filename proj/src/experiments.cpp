#include "hardy/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <numbers>
#include <cmath>
#include <ostream>
#include <random>

#include "hardy/hardy_core.hpp"
#include "hardy/operators.hpp"
#include "hardy/orbit.hpp"

namespace hardy {

namespace {

using Failures = std::vector<std::string>;

std::size_t as_size(long long v) { return static_cast<std::size_t>(v); }

std::vector<cplx> random_coeffs(std::mt19937_64& rng, std::size_t degree) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<cplx> c(degree + 1);
  for (auto& v : c) {
    const double re = unit(rng);
    const double im = unit(rng);
    v = {re, im};
  }
  return c;
}

OpMatrix make_operator(const std::string& name, std::size_t degree, std::uint64_t seed, const CoeffVec& symbol) {
  if (name == "shift") return shift_op(degree);
  if (name == "backshift") return backward_shift_op(degree);
  if (name == "identity") return identity_op(degree);
  if (name == "mult") return multiplication_op(symbol, degree);
  if (name == "random") return random_op(degree, seed);
  if (name == "zero") return OpMatrix(degree + 1);
  if (name == "diag-top") {
    std::vector<cplx> d(degree + 1);
    d.back() = 1.0;
    return diagonal_op(d);
  }
  throw ValidationError("operator: unknown operator '" + name +
                        "' (expected shift, backshift, identity, mult, random, zero, diag-top)");
}

// Exact action where the operator has one, otherwise the degree-limited matrix.
OperatorAction make_action(const std::string& name, const OpMatrix& t, const CoeffVec& symbol) {
  if (name == "shift") return OperatorAction::shift();
  if (name == "backshift") return OperatorAction::backward_shift();
  if (name == "identity") return OperatorAction::identity();
  if (name == "mult") return OperatorAction::multiplication(symbol);
  if (name == "zero") return OperatorAction::zero();
  return OperatorAction::matrix(t);
}

// ---------------------------------------------------------------------------

ExperimentResult kernel_sweep(ParamReader& p, std::uint64_t seed) {
  const auto radii = p.reals("radii", "0,0.3,0.6,0.9,0.99");
  const auto angles = as_size(p.integer("angles", 8, 1));
  const auto samples = as_size(p.integer("samples", 4, 1));
  const double tol = p.real("repro_tol", 1e-13);
  p.finish();
  std::mt19937_64 rng(seed);
  SweepReport r("kernel-sweep", {"re(lambda)", "im(lambda)", "D", "normSq", "exactNormSq", "reproRelErr"});
  Failures fails;
  for (double rad : radii) {
    if (!(rad >= 0.0 && rad < 1.0)) throw ValidationError("config: key 'radii' entries must lie in [0, 1)");
    for (std::size_t a = 0; a < (rad == 0.0 ? 1 : angles); ++a) {
      const DiskPoint lam(std::polar(rad, 2.0 * std::numbers::pi * static_cast<double>(a) / static_cast<double>(angles)));
      const std::size_t d = truncation_degree(rad);
      const CoeffVec k = kernel_vec(lam, d);
      double worst = 0.0;
      for (std::size_t s = 0; s < samples; ++s) {
        const CoeffVec f(random_coeffs(rng, d));
        const cplx viaKernel = inner(f, k);
        const cplx viaHorner = eval(f, lam);
        worst = std::max(worst, std::abs(viaKernel - viaHorner) / std::abs(viaHorner));
      }
      const double n2 = norm(k) * norm(k);
      r.add_row({lam.value().real(), lam.value().imag(), static_cast<std::int64_t>(d), n2, 1.0 / (1.0 - rad * rad),
                 worst});
      if (!(worst <= tol)) fails.push_back("reproducing property error " + format_double(worst) + " at |lambda|=" +
                                           format_double(rad));
    }
  }
  r.set_meta("truncation_eps", kTruncationEps);
  return {std::move(r), std::move(fails)};
}

ExperimentResult berezin_experiment(ParamReader& p, std::uint64_t seed) {
  const std::string mode = p.text("mode", "chain");
  const std::string op = p.text("operator", "shift");
  const auto degree = as_size(p.integer("degree", 63, 1));
  const CoeffVec symbol = CoeffVec::from_real(p.reals("symbol", "1,0.5"));
  const OpMatrix t = make_operator(op, degree, seed, symbol);
  if (mode == "chain") {
    const auto nr = as_size(p.integer("grid_radii", 20, 2));
    const auto na = as_size(p.integer("grid_angles", 20, 1));
    const double rmax = p.real("rmax", max_radius_for_degree(degree));
    p.finish();
    if (!(rmax >= 0.0 && rmax < 1.0)) throw ValidationError("config: key 'rmax' must lie in [0, 1)");
    const auto grid = polar_grid(nr, na, rmax);
    SweepReport r = berezin_norms(t, grid);
    const BerezinChain c{r.numeric_column("value")[0], r.numeric_column("value")[1], r.numeric_column("value")[2],
                         r.numeric_column("value")[3]};
    Failures fails;
    const double slack = 1e-10;
    if (!(c.number <= c.small_norm + slack && c.small_norm <= c.big_norm + slack && c.big_norm <= c.norm + slack)) {
      fails.push_back("Berezin chain not nondecreasing");
    }
    r.set_meta("chain_slack", slack);
    return {std::move(r), std::move(fails)};
  }
  if (mode == "lemma1") {
    const cplx mu = p.complex("mu", "0.5,0");
    const cplx dir = p.complex("direction", "1,0");
    const auto radii = p.reals("radii", "0.5,0.9,0.99,0.999,0.9999");
    const double tol = p.real("lemma1_tol", 1e-3);
    p.finish();
    SweepReport r = lemma1_sweep(make_action(op, t, symbol), DiskPoint(mu), dir, radii);
    r.set_meta("lemma1_tol", tol);
    Failures fails;
    const double last = r.numeric_column("value").back();
    if (!(last <= tol)) {
      fails.push_back("lemma1 value " + format_double(last) + " at r=" + format_double(radii.back()) +
                      " above tolerance " + format_double(tol));
    }
    return {std::move(r), std::move(fails)};
  }
  throw ValidationError("config: key 'mode' has invalid value '" + mode + "' (chain or lemma1)");
}

ExperimentResult semigroup_experiment(ParamReader& p, std::uint64_t seed) {
  const auto ms = p.integers("m", "2", 1);
  const auto ns = p.integers("n", "3", 1);
  const auto degree = as_size(p.integer("D", 100, 0));
  p.finish();
  SweepReport r("semigroup-check", {"m", "n", "D", "residual", "isometryResidual"});
  Failures fails;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> ticks(-256, 256);
  for (long long m : ms) {
    for (long long n : ns) {
      const double res = semigroup_check(as_size(m), as_size(n), degree);
      // dyadic coefficients: every partial sum of squares is exact in double
      std::vector<cplx> c(degree / as_size(n) + 1);
      for (auto& v : c) {
        const int re = ticks(rng);
        const int im = ticks(rng);
        v = {re / 256.0, im / 256.0};
      }
      const CoeffVec f(std::move(c));
      const double wf = inner(w_apply(as_size(n), f), w_apply(as_size(n), f)).real();
      const double iso = std::abs(wf - static_cast<double>(n) * inner(f, f).real());
      r.add_row({static_cast<std::int64_t>(m), static_cast<std::int64_t>(n), static_cast<std::int64_t>(degree), res,
                 iso});
      if (res != 0.0) fails.push_back("semigroup residual nonzero for m=" + std::to_string(m) + " n=" + std::to_string(n));
      if (iso != 0.0) fails.push_back("isometry residual nonzero for n=" + std::to_string(n));
    }
  }
  return {std::move(r), std::move(fails)};
}

ExperimentResult hk_table(ParamReader& p, std::uint64_t) {
  const auto ks = p.integers("k", "2..4", 2);
  const auto degree = as_size(p.integer("D", 4096, 2));
  const auto nmax = as_size(p.integer("n_max", 16, 0));
  const double tol = p.real("oracle_tol", 1e-11);
  p.finish();
  SweepReport r("hk-table", {"k", "n", "coeff", "oracleAbsDiff"});
  Failures fails;
  double worst_all = 0.0;
  for (long long k : ks) {
    if (as_size(k) > degree) throw ValidationError("config: key 'k' entries must not exceed D");
    const HkFunction h = h_k(as_size(k), degree);
    const CoeffVec oracle = h_k_series_oracle(as_size(k), degree);
    double worst = 0.0;
    for (std::size_t n = 0; n <= degree; ++n) worst = std::max(worst, std::abs(h.coeffs[n] - oracle[n]));
    worst_all = std::max(worst_all, worst);
    for (std::size_t n = 0; n <= std::min(nmax, degree); ++n) {
      r.add_row({static_cast<std::int64_t>(k), static_cast<std::int64_t>(n), h.coeffs[n].real(),
                 std::abs(h.coeffs[n] - oracle[n])});
    }
    if (!(worst <= tol)) fails.push_back("h_" + std::to_string(k) + " oracle disagreement " + format_double(worst));
  }
  r.set_meta("max_oracle_abs_diff", worst_all);
  return {std::move(r), std::move(fails)};
}

std::vector<NamedVector> parse_targets(const std::string& list, std::size_t degree, std::size_t complement_k = 0) {
  std::vector<NamedVector> out;
  for (const auto& tok : split_list(list)) out.push_back(parse_target(tok, degree, complement_k));
  if (out.empty()) throw ValidationError("config: empty target list");
  return out;
}

ExperimentResult gram_dist(ParamReader& p, std::uint64_t) {
  const Family family = parse_family(p.text("family", "M"));
  const auto K = as_size(p.integer("K", 8, 2));
  const auto d = as_size(p.integer("d", 2, 2));
  const auto degree = as_size(p.integer("D", 4096, 1));
  const std::string mode_text = p.text("pair_mode", "all");
  const std::string targets = p.text("targets", "1-z,one,h_2-h_3");
  p.finish();
  if (mode_text != "all" && mode_text != "star") throw ValidationError("config: key 'pair_mode' must be all or star");
  const PairMode mode = mode_text == "all" ? PairMode::all_pairs : PairMode::star;
  const GramSystem g(build_basis(family, K, d, degree, mode));
  SweepReport r("gram-dist", {"targetLabel", "dist", "effectiveRank", "condEstimate"});
  for (const auto& t : parse_targets(targets, degree)) {
    r.add_row({t.label, g.dist(t.vec), static_cast<std::int64_t>(g.effective_rank()), g.gram_condition()});
  }
  r.set_meta("basis_size", static_cast<std::int64_t>(g.size()));
  r.set_meta("rankTol", g.rank_tol());
  Failures fails;
  if (g.ill_conditioned()) fails.push_back("Gram condition " + format_double(g.gram_condition()) + " exceeds 1e14");
  return {std::move(r), std::move(fails)};
}

ExperimentResult eq_checks(ParamReader& p, std::uint64_t) {
  const std::string check = p.text("check", "eq4");
  Failures fails;
  if (check == "eq4" || check == "eq6") {
    const bool eq4 = check == "eq4";
    const auto nr = as_size(p.integer("grid_radii", eq4 ? 12 : 5, 2));
    const auto na = as_size(p.integer("grid_angles", eq4 ? 9 : 6, 1));
    const double rmax = p.real("rmax", eq4 ? 0.95 : 0.9);
    const double tol = p.real("tol", eq4 ? 1e-10 : 1e-8);
    const std::size_t kmax = eq4 ? 0 : as_size(p.integer("kmax", 6, 2));
    p.finish();
    if (!(rmax >= 0.0 && rmax < 1.0)) throw ValidationError("config: key 'rmax' must lie in [0, 1)");
    const auto grid = polar_grid(nr, na, rmax);
    if (eq4) {
      SweepReport r("eq-checks-eq4", {"re(lambda)", "im(lambda)", "closedForm", "direct", "absDiff"});
      for (const auto& lam : grid) {
        const auto c = eq4_check(lam);
        const double diff = std::abs(c.closed_form - c.direct);
        r.add_row({lam.value().real(), lam.value().imag(), c.closed_form, c.direct, diff});
        if (!(diff <= tol)) fails.push_back("eq4 mismatch " + format_double(diff) + " at " + to_string(lam.value()));
      }
      return {std::move(r), std::move(fails)};
    }
    SweepReport r("eq-checks-eq6", {"k", "l", "re(lambda)", "im(lambda)", "re(closedForm)", "im(closedForm)",
                                    "re(direct)", "im(direct)", "absDiff"});
    for (std::size_t k = 2; k <= kmax; ++k) {
      for (std::size_t l = 2; l <= kmax; ++l) {
        for (const auto& lam : grid) {
          const auto c = eq6_check(k, l, lam);
          const double diff = std::abs(c.closed_form - c.direct);
          r.add_row({static_cast<std::int64_t>(k), static_cast<std::int64_t>(l), lam.value().real(),
                     lam.value().imag(), c.closed_form.real(), c.closed_form.imag(), c.direct.real(), c.direct.imag(),
                     diff});
          if (!(diff <= tol)) {
            fails.push_back("eq6 mismatch " + format_double(diff) + " at k=" + std::to_string(k) +
                            " l=" + std::to_string(l));
          }
        }
      }
    }
    return {std::move(r), std::move(fails)};
  }
  if (check == "eq7") {
    const std::string pairs = p.text("pairs", "2:3,2:4,3:3");
    const double tol = p.real("tol", 1e-6);
    p.finish();
    SweepReport r("eq-checks-eq7", {"k", "l", "analytic", "extrapolated", "absDiff", "finalMagnitude"});
    for (const auto& item : split_list(pairs)) {
      const auto colon = item.find(':');
      if (colon == std::string::npos) throw ValidationError("config: key 'pairs' expects k:l entries (got '" + item + "')");
      const long long k = parse_int("pairs", item.substr(0, colon));
      const long long l = parse_int("pairs", item.substr(colon + 1));
      if (k < 2 || l < 2) throw ValidationError("config: key 'pairs' entries must be >= 2");
      const auto lim = eq7_limit(as_size(k), as_size(l));
      const double diff = std::abs(lim.analytic - lim.extrapolated);
      r.add_row({static_cast<std::int64_t>(k), static_cast<std::int64_t>(l), lim.analytic, lim.extrapolated, diff,
                 lim.final_magnitude});
      if (!(diff <= tol)) fails.push_back("eq7 limit mismatch " + format_double(diff) + " for " + item);
    }
    r.set_meta("first_level", static_cast<std::int64_t>(kLimitFirstLevel));
    r.set_meta("last_level", static_cast<std::int64_t>(kLimitLastLevel));
    return {std::move(r), std::move(fails)};
  }
  throw ValidationError("config: key 'check' has invalid value '" + check + "' (eq4, eq6 or eq7)");
}

void require_monotone(const SweepReport& r, const std::string& group_col, const std::string& value_col,
                      Failures& fails) {
  const auto groups = r.text_column(group_col);
  const auto values = r.numeric_column(value_col);
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (groups[j] != groups[i]) continue;
      if (values[j] > values[i] + 1e-12) fails.push_back("nested-span distance increased for " + groups[i]);
      break;
    }
  }
}

ExperimentResult codim_experiment(ParamReader& p, std::uint64_t) {
  const auto K = as_size(p.integer("K", 40, 3));
  const auto degree = as_size(p.integer("D", 65536, 3));
  const std::string cands = p.text("candidates", "1-z,complement");
  p.finish();
  SweepReport r = codim_probe(K, degree, parse_targets(cands, degree, K));
  Failures fails;
  require_monotone(r, "candidateLabel", "dist", fails);
  if (*r.meta("ill_conditioned_rows") != "0") fails.push_back("Gram condition exceeded 1e14");
  return {std::move(r), std::move(fails)};
}

ExperimentResult density_experiment(ParamReader& p, std::uint64_t) {
  const Family family = parse_family(p.text("family", "N"));
  const auto kmax = as_size(p.integer("Kmax", 64, 3));
  const auto degree = as_size(p.integer("D", 65536, 3));
  const std::string targets = p.text("targets", "one");
  p.finish();
  SweepReport r = density_sequence(parse_targets(targets, degree), family, kmax, degree);
  Failures fails;
  require_monotone(r, "targetLabel", "dist", fails);
  if (*r.meta("ill_conditioned_rows") != "0") fails.push_back("Gram condition exceeded 1e14");
  return {std::move(r), std::move(fails)};
}

ExperimentResult orbit_experiment(ParamReader& p, std::uint64_t seed) {
  const std::string gens = p.text("generators", "shift");
  const auto degree = as_size(p.integer("degree", 63, 1));
  const CoeffVec symbol = CoeffVec::from_real(p.reals("symbol", "1,0.5"));
  const CoeffVec g = CoeffVec::from_real(p.reals("g", "1,0.5"));
  const auto L = as_size(p.integer("L", 8, 1));
  const std::string targets = p.text("targets", "one");
  const bool include_identity = p.boolean("include_identity", true);
  p.finish();
  AlgebraSpec a;
  a.include_identity = include_identity;
  a.max_word_length = L;
  std::uint64_t s = seed;
  for (const auto& name : split_list(gens)) a.generators.push_back(make_operator(name, degree, s++, symbol));
  SweepReport r = orbit_density(a, g, L, parse_targets(targets, degree));
  Failures fails;
  require_monotone(r, "targetLabel", "dist", fails);
  return {std::move(r), std::move(fails)};
}

}  // namespace

NamedVector parse_target(const std::string& token, std::size_t degree, std::size_t complement_k) {
  auto bad = [&]() -> NamedVector {
    throw ValidationError("config: unknown target '" + token + "' (one, 1-z, z^m, h_k, h_k-h_l, complement)");
  };
  if (token == "one" || token == "1") return {token, CoeffVec::monomial(0, degree)};
  if (token == "1-z") return {token, one_minus_z(degree)};
  if (token == "complement") {
    if (complement_k < 3) bad();
    return {token, complement_direction(complement_k, degree)};
  }
  if (token.rfind("z^", 0) == 0) {
    const long long m = parse_int("targets", token.substr(2));
    if (m < 0 || as_size(m) > degree) bad();
    return {token, CoeffVec::monomial(as_size(m), degree)};
  }
  if (token.rfind("h_", 0) == 0) {
    const auto dash = token.find("-h_");
    if (dash == std::string::npos) {
      const long long k = parse_int("targets", token.substr(2));
      if (k < 2 || as_size(k) > degree) bad();
      return {token, h_k(as_size(k), degree).coeffs};
    }
    const long long k = parse_int("targets", token.substr(2, dash - 2));
    const long long l = parse_int("targets", token.substr(dash + 3));
    if (k < 2 || l < 2 || as_size(std::max(k, l)) > degree) bad();
    return {token, h_k(as_size(k), degree).coeffs - h_k(as_size(l), degree).coeffs};
  }
  return bad();
}

ExperimentResult run_experiment(const RunConfig& cfg) {
  ParamReader p(cfg);
  ExperimentResult res;
  const std::string& e = cfg.experiment;
  if (e == "kernel-sweep") {
    res = kernel_sweep(p, cfg.seed);
  } else if (e == "berezin") {
    res = berezin_experiment(p, cfg.seed);
  } else if (e == "semigroup-check") {
    res = semigroup_experiment(p, cfg.seed);
  } else if (e == "hk-table") {
    res = hk_table(p, cfg.seed);
  } else if (e == "gram-dist") {
    res = gram_dist(p, cfg.seed);
  } else if (e == "eq-checks") {
    res = eq_checks(p, cfg.seed);
  } else if (e == "codim-probe") {
    res = codim_experiment(p, cfg.seed);
  } else if (e == "density-probe") {
    res = density_experiment(p, cfg.seed);
  } else if (e == "orbit-probe") {
    res = orbit_experiment(p, cfg.seed);
  } else {
    throw ValidationError("config: unknown experiment '" + e + "'");
  }
  // config first, then whatever the computation recorded
  SweepReport& r = res.report;
  auto computed = r.metadata();
  SweepReport out(r.id(), r.columns());
  for (const auto& row : r.rows()) out.add_row(row);
  out.set_meta("config_experiment", e);
  out.set_meta("seed", cfg.seed_text);
  for (const auto& [k, v] : p.resolved()) out.set_meta("param." + k, v);
  for (const auto& [k, v] : computed) out.set_meta(k, v);
  out.set_meta("status", res.quality_failures.empty() ? std::string("ok") : std::string("numerical-quality-failure"));
  res.report = std::move(out);
  return res;
}

int run(const RunConfig& cfg, std::ostream& log, bool quiet) {
  ExperimentResult res;
  const auto start = std::chrono::steady_clock::now();
  try {
    res = run_experiment(cfg);
  } catch (const ValidationError& e) {
    log << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const NumericalError& e) {
    log << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  try {
    const auto paths = emit(res.report, cfg.format, cfg.output_dir);
    if (!quiet) {
      for (const auto& path : paths) log << "wrote " << path.string() << "\n";
      log << "wall time " << secs << " s\n";
    }
  } catch (const std::exception& e) {
    log << "error: " << e.what() << "\n";
    return kExitIo;
  }
  if (!res.quality_failures.empty()) {
    for (const auto& f : res.quality_failures) log << "quality failure: " << f << "\n";
    return kExitNumerical;
  }
  return kExitOk;
}

}  // namespace hardy
