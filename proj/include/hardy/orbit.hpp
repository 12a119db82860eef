#pragma once

// Finite surrogate for the cyclic subspace clos{A g : A in the algebra}:
// linear spans of W g over words W of bounded length in the generators.

#include <cstddef>
#include <vector>

#include "hardy/noor.hpp"
#include "hardy/operators.hpp"

namespace hardy {

inline constexpr std::size_t kMaxWordCount = 100000;
inline constexpr double kOrbitDedupThreshold = 1e-10;

struct AlgebraSpec {
  std::vector<OpMatrix> generators;
  bool include_identity = true;
  std::size_t max_word_length = 1;

  std::size_t dim() const;
  /// Throws unless generators are nonempty and share one dimension.
  void validate() const;
};

struct OrbitBasis {
  SubspaceBasis basis;
  /// Word length of each accepted vector (0 for g itself).
  std::vector<std::size_t> word_length;
  /// Number of words enumerated, accepted or not.
  std::size_t words_enumerated = 0;
};

/// Breadth-first word enumeration; a word w·i is A_i applied to w(g).
/// A vector is kept when its residual against the kept ones exceeds
/// 1e−10·‖v‖.
OrbitBasis orbit_basis(const AlgebraSpec& a, const CoeffVec& g, std::size_t max_len);

/// Rows (L, targetLabel, dist, basisSize) for L = 1..max_len.
SweepReport orbit_density(const AlgebraSpec& a, const CoeffVec& g, std::size_t max_len,
                          const std::vector<NamedVector>& targets);

}  // namespace hardy
