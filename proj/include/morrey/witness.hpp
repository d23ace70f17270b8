#pragma once

#include <optional>
#include <vector>

#include "morrey/constants.hpp"
#include "morrey/lattice.hpp"
#include "morrey/norm.hpp"

namespace morrey {

/// 2^{q/(d(q-p))} - 1; the witness index n must be even and exceed it.
double witness_threshold(const SpaceParams& sp);

/// (n+1)^{d(1/q-1/p)} 2^{1/p}: the value of the covering window of the witness x,
/// which must stay strictly below 1.
double covering_window_value(const SpaceParams& sp, Coord n);

/// Smallest even n above witness_threshold(sp), confirmed against the covering-window
/// inequality in double precision. Throws DomainError for p = q or when the margin is
/// below 1e-15, and SizeError when n does not fit a lattice coordinate.
Coord minimal_even_n(const SpaceParams& sp);

struct WitnessPair {
  SpaceParams space;
  Coord n;
  /// 1 at the origin and at (n, 0, ..., 0).
  SparseSequence x;
  /// 1 at the origin and -1 at (n, 0, ..., 0).
  SparseSequence y;
};

/// Builds the extremal pair for p < q. An explicit n must be even and pass the
/// covering-window inequality; a DomainError names the violated condition.
WitnessPair build_witness(const SpaceParams& sp, std::optional<Coord> n = std::nullopt);

struct TheoremRow {
  ConstantKind kind;
  double witness_quotient = 0.0;
  /// The constant's value: 2 when the witness attains the analytic upper bound.
  double reported = 0.0;
  bool pass = false;
};

struct TheoremReport {
  WitnessPair witness;
  double threshold = 0.0;
  PairNorms norms;
  bool norms_pass = false;
  double tol = 0.0;
  /// One row per parameter-free constant, and one per (constant, s) for the others.
  std::vector<TheoremRow> rows;

  bool all_pass() const;
};

/// Builds the witness and evaluates every constant on it without throwing on failed checks.
TheoremReport evaluate_theorem(const SpaceParams& sp, const std::vector<double>& s_list, double tol,
                               std::optional<Coord> n = std::nullopt);

/// As evaluate_theorem, but throws VerificationError at the first failed check.
TheoremReport verify_theorem(const SpaceParams& sp, const std::vector<double>& s_list, double tol,
                             std::optional<Coord> n = std::nullopt);

}  // namespace morrey
