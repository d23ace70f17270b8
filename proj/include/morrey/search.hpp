#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "morrey/constants.hpp"
#include "morrey/lattice.hpp"
#include "morrey/norm.hpp"

namespace morrey {

struct SearchConfig {
  /// Supports are confined to the box [-radius, radius]^d.
  Coord radius = 2;
  /// Random restarts, run after the deterministic seeded ones.
  unsigned restarts = 8;
  /// Coordinate sweeps per restart.
  unsigned max_iters = 200;
  double step_init = 0.5;
  double step_min = 1e-6;
  std::uint64_t seed = 0;
  /// Worker threads for the restarts; 0 means thread_limit().
  unsigned threads = 0;

  /// Throws ArgumentError on an invalid configuration.
  void validate() const;
};

using SequencePair = std::pair<SparseSequence, SparseSequence>;

/// A concrete pair proving the constant is at least `value`.
struct LowerBoundCertificate {
  ConstantKind kind;
  double value = 0.0;
  /// Unit-normalized for unit-sphere kinds.
  SparseSequence x;
  SparseSequence y;
  PairNorms norms;
  /// Index of the restart that produced the pair (seeded restarts come first).
  std::size_t restart = 0;
};

/// Deterministic starting pairs inside [-R, R]^d: the witness pair (for p < q, centered
/// on the origin along the first axis, when it fits), then (e_0, e_1) and
/// (e_0 + e_1, e_0 - e_1). With R = 0 only the single-site pair (e_0, e_0) remains.
std::vector<SequencePair> seeded_restarts(const SpaceParams& sp, Coord radius);

/// Quotient used by the search: auto-normalized for unit-sphere kinds, -inf for a zero element.
double search_objective(const ConstantKind& kind, const SparseSequence& x, const SparseSequence& y,
                        const SpaceParams& sp);

struct HillClimbResult {
  SparseSequence x;
  SparseSequence y;
  double value = 0.0;
  unsigned sweeps = 0;
  /// Objective after every accepted move, starting with the initial pair.
  std::vector<double> accepted;
};

/// Coordinate-wise hill climbing over the entries of x and y on the box: each entry is
/// moved by +step then -step and kept on strict improvement; a sweep without improvement
/// halves the step. Stops below step_min or after max_iters sweeps.
HillClimbResult hill_climb(const ConstantKind& kind, const SpaceParams& sp, const SequencePair& start,
                           const SearchConfig& cfg);

/// Multi-start maximization of the quotient of `kind`. Deterministic for a given config,
/// independent of the thread count.
LowerBoundCertificate maximize_quotient(const ConstantKind& kind, const SpaceParams& sp,
                                        const SearchConfig& cfg);

/// Recomputes the certificate's quotient from its pair.
bool certificate_holds(const LowerBoundCertificate& cert, const SpaceParams& sp, double rel_tol = 1e-10);

}  // namespace morrey
