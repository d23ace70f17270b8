#include "morrey/witness.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "morrey/error.hpp"

namespace morrey {

namespace {

// n stays exactly representable in a double so the threshold comparison is exact.
constexpr double kMaxWitnessIndex = 9007199254740992.0;  // 2^53
constexpr double kPrecisionMargin = 1e-15;

SparseSequence witness_sequence(std::size_t dim, Coord n, double far_value) {
  std::vector<Coord> far(dim, 0);
  far[0] = n;
  return SparseSequence(dim, {{LatticePoint::origin(dim), 1.0}, {LatticePoint(far), far_value}});
}

std::string format(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

}  // namespace

double witness_threshold(const SpaceParams& sp) {
  sp.require_strict();
  return std::exp2(sp.q() / (static_cast<double>(sp.d()) * (sp.q() - sp.p()))) - 1.0;
}

double covering_window_value(const SpaceParams& sp, Coord n) {
  const double log_value = static_cast<double>(sp.d()) * sp.weight_exponent() *
                               std::log(static_cast<double>(n) + 1.0) +
                           std::log(2.0) / sp.p();
  return std::exp(log_value);
}

Coord minimal_even_n(const SpaceParams& sp) {
  const double threshold = witness_threshold(sp);
  if (!(threshold < kMaxWitnessIndex)) {
    throw SizeError("witness index exceeds 2^53: threshold 2^{q/(d(q-p))} - 1 = " + format(threshold));
  }
  // threshold >= 0 since q/(d(q-p)) > 0.
  const auto floor_t = static_cast<Coord>(std::floor(threshold));
  const Coord n = floor_t % 2 == 0 ? floor_t + 2 : floor_t + 1;
  const double lhs = covering_window_value(sp, n);
  if (!(lhs < 1.0)) {
    throw DomainError("n = " + std::to_string(n) + " fails (n+1)^{d(1/q-1/p)} 2^{1/p} < 1 in double precision (" +
                      format(lhs) + ")");
  }
  if (1.0 - lhs < kPrecisionMargin) {
    throw DomainError("precision: margin 1 - (n+1)^{d(1/q-1/p)} 2^{1/p} = " + format(1.0 - lhs) +
                      " is below 1e-15 for n = " + std::to_string(n));
  }
  return n;
}

WitnessPair build_witness(const SpaceParams& sp, std::optional<Coord> n) {
  sp.require_strict();
  Coord index = 0;
  if (n) {
    index = *n;
    if (index <= 0 || index % 2 != 0) {
      throw DomainError("witness index n must be an even positive integer, got " + std::to_string(index));
    }
    const double lhs = covering_window_value(sp, index);
    if (!(lhs < 1.0)) {
      throw DomainError("n = " + std::to_string(index) + " violates (n+1)^{d(1/q-1/p)} 2^{1/p} < 1 (value " +
                        format(lhs) + "); need n > 2^{q/(d(q-p))} - 1 = " + format(witness_threshold(sp)));
    }
  } else {
    index = minimal_even_n(sp);
  }
  return WitnessPair{sp, index, witness_sequence(sp.d(), index, 1.0), witness_sequence(sp.d(), index, -1.0)};
}

bool TheoremReport::all_pass() const {
  if (!norms_pass) return false;
  for (const auto& row : rows) {
    if (!row.pass) return false;
  }
  return true;
}

TheoremReport evaluate_theorem(const SpaceParams& sp, const std::vector<double>& s_list, double tol,
                               std::optional<Coord> n) {
  TheoremReport report{build_witness(sp, n), witness_threshold(sp), {}, false, tol, {}};
  const auto& w = report.witness;
  report.norms.x = norm(w.x, sp).norm;
  report.norms.y = norm(w.y, sp).norm;
  report.norms.sum = norm(combine(w.x, w.y, +1), sp).norm;
  report.norms.diff = norm(combine(w.x, w.y, -1), sp).norm;
  auto near = [tol](double v, double target) { return std::abs(v - target) <= tol; };
  report.norms_pass = near(report.norms.x, 1.0) && near(report.norms.y, 1.0) && near(report.norms.sum, 2.0) &&
                      near(report.norms.diff, 2.0);

  auto add_row = [&](const ConstantKind& kind) {
    TheoremRow row{kind, quotient_from_norms(kind, report.norms), 0.0, false};
    row.pass = report.norms_pass && row.witness_quotient >= 2.0 - tol &&
               row.witness_quotient <= analytic_bounds(kind).upper + tol;
    row.reported = row.pass ? analytic_bounds(kind).upper : row.witness_quotient;
    report.rows.push_back(row);
  };
  for (Constant c : kAllConstants) {
    if (takes_s(c)) {
      for (double s : s_list) add_row(ConstantKind(c, s));
    } else {
      add_row(ConstantKind(c));
    }
  }
  return report;
}

TheoremReport verify_theorem(const SpaceParams& sp, const std::vector<double>& s_list, double tol,
                             std::optional<Coord> n) {
  TheoremReport report = evaluate_theorem(sp, s_list, tol, n);
  const std::pair<const char*, std::pair<double, double>> checks[] = {
      {"||x||", {report.norms.x, 1.0}},
      {"||y||", {report.norms.y, 1.0}},
      {"||x+y||", {report.norms.sum, 2.0}},
      {"||x-y||", {report.norms.diff, 2.0}},
  };
  for (const auto& [name, vt] : checks) {
    if (std::abs(vt.first - vt.second) > tol) {
      throw VerificationError(name, vt.first,
                              std::string(name) + " = " + format(vt.first) + ", expected " + format(vt.second));
    }
  }
  for (const auto& row : report.rows) {
    if (!row.pass) {
      throw VerificationError(row.kind.label(), row.witness_quotient,
                              row.kind.label() + " quotient " + format(row.witness_quotient) + " is below 2 - tol");
    }
  }
  return report;
}

}  // namespace morrey
