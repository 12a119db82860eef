#include "hardy/orbit.hpp"

#include <string>

#include "hardy/hardy_core.hpp"

namespace hardy {

std::size_t AlgebraSpec::dim() const {
  validate();
  return generators.front().dim();
}

void AlgebraSpec::validate() const {
  if (generators.empty()) throw ValidationError("AlgebraSpec: at least one generator required");
  for (const auto& g : generators) {
    if (g.dim() != generators.front().dim()) throw ValidationError("AlgebraSpec: generators must share dimension");
  }
}

namespace {

struct Word {
  std::string label;
  std::vector<cplx> vec;
};

std::size_t total_words(std::size_t gens, std::size_t max_len) {
  std::size_t total = 0, level = 1;
  for (std::size_t l = 1; l <= max_len; ++l) {
    if (level > kMaxWordCount / gens) return kMaxWordCount + 1;
    level *= gens;
    total += level;
    if (total > kMaxWordCount) return total;
  }
  return total;
}

}  // namespace

OrbitBasis orbit_basis(const AlgebraSpec& a, const CoeffVec& g, std::size_t max_len) {
  a.validate();
  if (max_len < 1) throw ValidationError("orbit_basis: L must be >= 1");
  const std::size_t dim = a.dim();
  if (g.degree() + 1 > dim) throw ValidationError("orbit_basis: g degree exceeds generator dimension");
  if (norm(g) == 0.0) throw ValidationError("orbit_basis: g must be nonzero");
  const std::size_t ngen = a.generators.size();
  if (total_words(ngen, max_len) > kMaxWordCount) {
    throw ValidationError("orbit_basis: word count over " + std::to_string(kMaxWordCount) + " (generators=" +
                          std::to_string(ngen) + ", L=" + std::to_string(max_len) + ")");
  }

  const std::size_t degree = dim - 1;
  GramSystem gram(degree);
  OrbitBasis out{SubspaceBasis(Family::custom, degree), {}, 0};
  auto accept = [&](const CoeffVec& v, const std::string& label, std::size_t len) {
    if (gram.append_if_independent(v, label, kOrbitDedupThreshold)) {
      out.basis.add(v, label);
      out.word_length.push_back(len);
    }
  };

  const CoeffVec g0 = g.resized(degree);
  if (a.include_identity) accept(g0, "g", 0);

  std::vector<Word> frontier{{"g", std::vector<cplx>(g0.coeffs().begin(), g0.coeffs().end())}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next(frontier.size() * ngen);
#pragma omp parallel for schedule(static)
    for (std::size_t idx = 0; idx < next.size(); ++idx) {
      const Word& parent = frontier[idx / ngen];
      const std::size_t gen = idx % ngen;
      std::vector<cplx> y(dim);
      kernels::parallel::matvec(a.generators[gen].view(), parent.vec, y);
      next[idx] = {"A" + std::to_string(gen) + " " + parent.label, std::move(y)};
    }
    // acceptance runs in enumeration order
    for (const auto& w : next) accept(CoeffVec(w.vec), w.label, len);
    out.words_enumerated += next.size();
    frontier = std::move(next);
  }
  return out;
}

SweepReport orbit_density(const AlgebraSpec& a, const CoeffVec& g, std::size_t max_len,
                          const std::vector<NamedVector>& targets) {
  const OrbitBasis ob = orbit_basis(a, g, max_len);
  const std::size_t degree = ob.basis.degree();
  GramSystem gram(degree);
  std::size_t next = 0;
  auto absorb = [&](std::size_t len) {
    while (next < ob.basis.size() && ob.word_length[next] <= len) {
      gram.append(ob.basis.vectors()[next], ob.basis.labels()[next]);
      ++next;
    }
  };
  absorb(0);
  SweepReport report("orbit-probe", {"L", "targetLabel", "dist", "basisSize"});
  for (std::size_t len = 1; len <= max_len; ++len) {
    absorb(len);
    for (const auto& t : targets) {
      report.add_row({static_cast<std::int64_t>(len), t.label, gram.dist(t.vec.resized(degree)),
                      static_cast<std::int64_t>(gram.size())});
    }
  }
  report.set_meta("dim", static_cast<std::int64_t>(a.dim()));
  report.set_meta("generators", static_cast<std::int64_t>(a.generators.size()));
  report.set_meta("include_identity", std::string(a.include_identity ? "true" : "false"));
  report.set_meta("L", static_cast<std::int64_t>(max_len));
  report.set_meta("dedup_threshold", kOrbitDedupThreshold);
  report.set_meta("words_enumerated", static_cast<std::int64_t>(ob.words_enumerated));
  return report;
}

}  // namespace hardy
