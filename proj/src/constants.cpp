#include "morrey/constants.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "morrey/error.hpp"

namespace morrey {

namespace {

constexpr std::array<std::pair<Constant, std::string_view>, 8> kNames = {{
    {Constant::nj_gen, "nj-gen"},
    {Constant::nj_mod, "nj-mod"},
    {Constant::nj_mod_gen, "nj-mod-gen"},
    {Constant::ninf, "ninf"},
    {Constant::ninf_gen, "ninf-gen"},
    {Constant::zbaganu, "zbaganu"},
    {Constant::zbaganu_gen, "zbaganu-gen"},
    {Constant::james, "james"},
}};

double fixed_s(Constant kind) { return kind == Constant::james ? 1.0 : 2.0; }

}  // namespace

bool takes_s(Constant kind) noexcept {
  switch (kind) {
    case Constant::nj_gen:
    case Constant::nj_mod_gen:
    case Constant::ninf_gen:
    case Constant::zbaganu_gen:
      return true;
    default:
      return false;
  }
}

std::string_view constant_name(Constant kind) noexcept {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

Constant parse_constant(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  throw ArgumentError("unknown constant '" + std::string(name) +
                      "' (expected nj-gen|nj-mod|nj-mod-gen|ninf|ninf-gen|zbaganu|zbaganu-gen|james)");
}

ConstantKind::ConstantKind(Constant kind, double s) : kind_(kind), s_(morrey::takes_s(kind) ? s : fixed_s(kind)) {
  if (morrey::takes_s(kind) && !(std::isfinite(s) && s >= 1.0)) {
    throw DomainError("parameter s must satisfy 1 <= s < inf");
  }
}

bool ConstantKind::takes_s() const noexcept { return morrey::takes_s(kind_); }

bool ConstantKind::unit_sphere_only() const noexcept {
  return kind_ == Constant::nj_mod || kind_ == Constant::nj_mod_gen || kind_ == Constant::james;
}

std::string_view ConstantKind::name() const noexcept { return constant_name(kind_); }

std::string ConstantKind::label() const {
  std::ostringstream out;
  out << name();
  if (takes_s()) out << "(s=" << s_ << ")";
  return out.str();
}

double quotient_from_norms(const ConstantKind& kind, const PairNorms& n) {
  const double s = kind.s();
  switch (kind.kind()) {
    case Constant::nj_gen:
      return (std::pow(n.sum, s) + std::pow(n.diff, s)) /
             (std::pow(2.0, s - 1.0) * (std::pow(n.x, s) + std::pow(n.y, s)));
    case Constant::nj_mod:
      return (n.sum * n.sum + n.diff * n.diff) / 4.0;
    case Constant::nj_mod_gen:
      return (std::pow(n.sum, s) + std::pow(n.diff, s)) / std::pow(2.0, s);
    case Constant::ninf: {
      const double m = std::min(n.sum, n.diff);
      return m * m / (n.x * n.x + n.y * n.y);
    }
    case Constant::ninf_gen:
      return std::pow(std::min(n.sum, n.diff), s) /
             (std::pow(2.0, s - 2.0) * (std::pow(n.x, s) + std::pow(n.y, s)));
    case Constant::zbaganu:
      return n.sum * n.diff / (n.x * n.x + n.y * n.y);
    case Constant::zbaganu_gen:
      return std::pow(n.sum, s / 2.0) * std::pow(n.diff, s / 2.0) /
             (std::pow(2.0, s - 2.0) * (std::pow(n.x, s) + std::pow(n.y, s)));
    case Constant::james:
      return std::min(n.sum, n.diff);
  }
  throw ArgumentError("quotient_from_norms: unknown constant");
}

QuotientReport quotient(const ConstantKind& kind, const SparseSequence& x, const SparseSequence& y,
                        const SpaceParams& sp, const QuotientOptions& options) {
  if (x.is_zero() || y.is_zero()) {
    throw DomainError(kind.label() + ": x and y must be nonzero");
  }
  PairNorms norms;
  norms.x = norm(x, sp, options.norm).norm;
  norms.y = norm(y, sp, options.norm).norm;

  const SparseSequence* px = &x;
  const SparseSequence* py = &y;
  SparseSequence unit_x(x.dim()), unit_y(y.dim());
  if (options.auto_normalize) {
    unit_x = scale(x, 1.0 / norms.x);
    unit_y = scale(y, 1.0 / norms.y);
    px = &unit_x;
    py = &unit_y;
    norms.x = norm(unit_x, sp, options.norm).norm;
    norms.y = norm(unit_y, sp, options.norm).norm;
  }
  if (kind.unit_sphere_only() &&
      (std::abs(norms.x - 1.0) > options.unit_tol || std::abs(norms.y - 1.0) > options.unit_tol)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << kind.label() << " is defined on the unit sphere; got ||x|| = " << norms.x
        << ", ||y|| = " << norms.y << " (enable auto-normalization to rescale)";
    throw DomainError(msg.str());
  }
  norms.sum = norm(combine(*px, *py, +1), sp, options.norm).norm;
  norms.diff = norm(combine(*px, *py, -1), sp, options.norm).norm;
  return QuotientReport{kind, quotient_from_norms(kind, norms), norms};
}

Interval analytic_bounds(const ConstantKind& kind) {
  switch (kind.kind()) {
    case Constant::ninf_gen:
    case Constant::zbaganu_gen:
      return {std::pow(2.0, 2.0 - kind.s()), 2.0};
    default:
      return {1.0, 2.0};
  }
}

std::string_view verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::uniformly_nonsquare: return "uniformly-nonsquare";
    case Verdict::not_uniformly_nonsquare: return "not-uniformly-nonsquare";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "unknown";
}

Verdict nonsquareness_verdict(double estimate, double tol, EstimateType type) {
  if (estimate >= 2.0 - tol) return Verdict::not_uniformly_nonsquare;
  return type == EstimateType::lower_bound ? Verdict::inconclusive : Verdict::uniformly_nonsquare;
}

}  // namespace morrey
