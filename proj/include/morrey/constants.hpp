#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>

#include "morrey/lattice.hpp"
#include "morrey/norm.hpp"

namespace morrey {

/// The geometric constants evaluated by this library.
enum class Constant {
  nj_gen,       ///< generalized von Neumann-Jordan C_NJ^(s)
  nj_mod,       ///< modified von Neumann-Jordan C'_NJ (unit sphere)
  nj_mod_gen,   ///< generalized modified von Neumann-Jordan (unit sphere)
  ninf,         ///< von Neumann-Jordan type constant C_{-inf}
  ninf_gen,     ///< generalized von Neumann-Jordan type constant C_{-inf}^(s)
  zbaganu,      ///< Zbaganu constant C_Z
  zbaganu_gen,  ///< generalized Zbaganu constant C_Z^(s)
  james,        ///< James constant C_J (unit sphere)
};

inline constexpr std::array<Constant, 8> kAllConstants = {
    Constant::nj_gen,  Constant::nj_mod,      Constant::nj_mod_gen, Constant::ninf,
    Constant::ninf_gen, Constant::zbaganu, Constant::zbaganu_gen, Constant::james};

/// A constant together with its parameter s. For kinds without a parameter
/// s is ignored and reported as the value built into the definition.
class ConstantKind {
 public:
  explicit ConstantKind(Constant kind, double s = 2.0);

  Constant kind() const noexcept { return kind_; }
  double s() const noexcept { return s_; }

  bool takes_s() const noexcept;
  bool unit_sphere_only() const noexcept;
  /// CLI spelling, e.g. "nj-gen".
  std::string_view name() const noexcept;
  /// "nj-gen(s=2)" or "ninf".
  std::string label() const;

  friend bool operator==(const ConstantKind&, const ConstantKind&) = default;

 private:
  Constant kind_;
  double s_;
};

bool takes_s(Constant kind) noexcept;
std::string_view constant_name(Constant kind) noexcept;
/// Inverse of constant_name; throws ArgumentError for unknown names.
Constant parse_constant(std::string_view name);

/// The four norms a quotient depends on.
struct PairNorms {
  double x = 0.0;
  double y = 0.0;
  double sum = 0.0;   ///< ||x + y||
  double diff = 0.0;  ///< ||x - y||
};

struct QuotientReport {
  ConstantKind kind;
  double value = 0.0;
  PairNorms norms;
};

/// The defining ratio of `kind` applied to already computed norms.
double quotient_from_norms(const ConstantKind& kind, const PairNorms& norms);

struct QuotientOptions {
  /// Divide x and y by their norms first (unit-sphere kinds only need this).
  bool auto_normalize = false;
  /// Allowed deviation of ||x||, ||y|| from 1 for unit-sphere kinds.
  double unit_tol = 1e-9;
  NormOptions norm;
};

/// Evaluates the defining ratio of `kind` at (x, y).
/// Throws DomainError for a zero element, or for a unit-sphere kind when
/// ||x|| or ||y|| is not 1 and auto_normalize is off.
QuotientReport quotient(const ConstantKind& kind, const SparseSequence& x, const SparseSequence& y,
                        const SpaceParams& sp, const QuotientOptions& options = {});

struct Interval {
  double lower = 0.0;
  double upper = 0.0;
};

/// Space-independent interval containing the constant (the supremum, not a pointwise ratio).
Interval analytic_bounds(const ConstantKind& kind);

enum class EstimateType { lower_bound, exact };
enum class Verdict { uniformly_nonsquare, not_uniformly_nonsquare, inconclusive };

std::string_view verdict_name(Verdict v) noexcept;

/// Reads a constant estimate against the analytic maximum 2. A value within tol of 2
/// shows the space is not uniformly nonsquare; a lower bound below that says nothing;
/// only an exact value below 2 - tol certifies uniform nonsquareness.
Verdict nonsquareness_verdict(double estimate, double tol, EstimateType type);

}  // namespace morrey
