#include "morrey/search.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "morrey/error.hpp"
#include "morrey/parallel.hpp"
#include "morrey/witness.hpp"

namespace morrey {

namespace {

constexpr int kMaxDegenerateDraws = 64;

// Inner norms stay single-threaded; parallelism lives at the restart level.
QuotientOptions search_quotient_options(const ConstantKind& kind) {
  QuotientOptions options;
  options.auto_normalize = kind.unit_sphere_only();
  options.norm.threads = 1;
  return options;
}

LatticePoint axis_point(std::size_t dim, Coord offset) {
  std::vector<Coord> c(dim, 0);
  c[0] = offset;
  return LatticePoint(std::move(c));
}

// Lattice points of [-R, R]^d in lexicographic order.
std::vector<LatticePoint> box_sites(std::size_t dim, Coord radius) {
  std::vector<LatticePoint> sites;
  std::vector<Coord> c(dim, -radius);
  while (true) {
    sites.emplace_back(c);
    std::size_t axis = dim;
    while (axis > 0) {
      --axis;
      if (++c[axis] <= radius) break;
      c[axis] = -radius;
      if (axis == 0) return sites;
    }
  }
}

SparseSequence from_dense(std::size_t dim, const std::vector<LatticePoint>& sites, const std::vector<double>& v) {
  SparseSequence::Map m;
  for (std::size_t i = 0; i < sites.size(); ++i) {
    if (v[i] != 0.0) m.emplace_hint(m.end(), sites[i], v[i]);
  }
  return SparseSequence(dim, std::move(m));
}

std::vector<double> to_dense(const SparseSequence& x, const std::vector<LatticePoint>& sites) {
  std::vector<double> v(sites.size(), 0.0);
  for (std::size_t i = 0; i < sites.size(); ++i) v[i] = x.at(sites[i]);
  return v;
}

std::mt19937_64 restart_stream(std::uint64_t seed, std::size_t restart) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(restart), static_cast<std::uint32_t>(restart >> 32)};
  return std::mt19937_64(seq);
}

SequencePair random_pair(const SpaceParams& sp, Coord radius, std::uint64_t seed, std::size_t restart) {
  const auto sites = box_sites(sp.d(), radius);
  auto rng = restart_stream(seed, restart);
  std::uniform_real_distribution<double> entry(-1.0, 1.0);
  for (int draw = 0; draw < kMaxDegenerateDraws; ++draw) {
    std::vector<double> xs(sites.size()), ys(sites.size());
    for (auto& v : xs) v = entry(rng);
    for (auto& v : ys) v = entry(rng);
    SequencePair pair{from_dense(sp.d(), sites, xs), from_dense(sp.d(), sites, ys)};
    if (!pair.first.is_zero() && !pair.second.is_zero()) return pair;
  }
  throw Error("random restart " + std::to_string(restart) + " drew only degenerate pairs");
}

}  // namespace

void SearchConfig::validate() const {
  if (radius < 0) throw ArgumentError("search radius must be non-negative");
  if (restarts == 0) throw ArgumentError("restarts must be positive");
  if (max_iters == 0) throw ArgumentError("max_iters must be positive");
  if (!(step_min > 0.0) || !(step_init > step_min) || !std::isfinite(step_init)) {
    throw ArgumentError("steps must satisfy 0 < step_min < step_init");
  }
}

std::vector<SequencePair> seeded_restarts(const SpaceParams& sp, Coord radius) {
  const std::size_t dim = sp.d();
  std::vector<SequencePair> pairs;
  if (sp.p() < sp.q()) {
    try {
      const Coord n = minimal_even_n(sp);
      if (n / 2 <= radius) {
        const WitnessPair w = build_witness(sp, n);
        const LatticePoint t = axis_point(dim, -n / 2);
        pairs.emplace_back(shift(w.x, t), shift(w.y, t));
      }
    } catch (const DomainError&) {
      // No representable witness for this space.
    } catch (const SizeError&) {
    }
  }
  const LatticePoint e0 = LatticePoint::origin(dim);
  if (radius == 0) {
    pairs.emplace_back(SparseSequence(dim, {{e0, 1.0}}), SparseSequence(dim, {{e0, 1.0}}));
    return pairs;
  }
  const LatticePoint e1 = axis_point(dim, 1);
  pairs.emplace_back(SparseSequence(dim, {{e0, 1.0}}), SparseSequence(dim, {{e1, 1.0}}));
  pairs.emplace_back(SparseSequence(dim, {{e0, 1.0}, {e1, 1.0}}), SparseSequence(dim, {{e0, 1.0}, {e1, -1.0}}));
  return pairs;
}

double search_objective(const ConstantKind& kind, const SparseSequence& x, const SparseSequence& y,
                        const SpaceParams& sp) {
  if (x.is_zero() || y.is_zero()) return -std::numeric_limits<double>::infinity();
  return quotient(kind, x, y, sp, search_quotient_options(kind)).value;
}

HillClimbResult hill_climb(const ConstantKind& kind, const SpaceParams& sp, const SequencePair& start,
                           const SearchConfig& cfg) {
  cfg.validate();
  const auto sites = box_sites(sp.d(), cfg.radius);
  const std::size_t count = sites.size();
  std::vector<double> xs = to_dense(start.first, sites);
  std::vector<double> ys = to_dense(start.second, sites);

  auto evaluate = [&] {
    return search_objective(kind, from_dense(sp.d(), sites, xs), from_dense(sp.d(), sites, ys), sp);
  };

  HillClimbResult result{start.first, start.second, evaluate(), 0, {}};
  result.accepted.push_back(result.value);
  double step = cfg.step_init;
  while (step >= cfg.step_min && result.sweeps < cfg.max_iters) {
    bool improved = false;
    for (std::size_t i = 0; i < 2 * count; ++i) {
      double& entry = i < count ? xs[i] : ys[i - count];
      const double original = entry;
      for (double delta : {step, -step}) {
        entry = original + delta;
        const double trial = evaluate();
        if (trial > result.value) {
          result.value = trial;
          result.accepted.push_back(trial);
          improved = true;
          break;
        }
        entry = original;
      }
    }
    ++result.sweeps;
    if (!improved) step /= 2.0;
  }
  result.x = from_dense(sp.d(), sites, xs);
  result.y = from_dense(sp.d(), sites, ys);
  return result;
}

LowerBoundCertificate maximize_quotient(const ConstantKind& kind, const SpaceParams& sp, const SearchConfig& cfg) {
  cfg.validate();
  std::vector<SequencePair> starts = seeded_restarts(sp, cfg.radius);
  const std::size_t seeded = starts.size();
  for (std::size_t r = 0; r < cfg.restarts; ++r) {
    starts.push_back(random_pair(sp, cfg.radius, cfg.seed, seeded + r));
  }

  std::vector<std::optional<HillClimbResult>> results(starts.size());
  const unsigned threads = cfg.threads == 0 ? thread_limit() : cfg.threads;
  parallel_for(starts.size(), threads, [&](std::size_t r) { results[r] = hill_climb(kind, sp, starts[r], cfg); });

  std::size_t best = 0;
  for (std::size_t r = 1; r < results.size(); ++r) {
    if (results[r]->value > results[best]->value) best = r;
  }
  const HillClimbResult& winner = *results[best];
  if (!std::isfinite(winner.value)) throw Error("search found no nondegenerate pair");

  const QuotientOptions options = search_quotient_options(kind);
  LowerBoundCertificate cert{kind, 0.0, winner.x, winner.y, {}, best};
  if (kind.unit_sphere_only()) {
    cert.x = scale(winner.x, 1.0 / norm(winner.x, sp, options.norm).norm);
    cert.y = scale(winner.y, 1.0 / norm(winner.y, sp, options.norm).norm);
  }
  const QuotientReport report = quotient(kind, cert.x, cert.y, sp, options);
  cert.value = report.value;
  cert.norms = report.norms;
  return cert;
}

bool certificate_holds(const LowerBoundCertificate& cert, const SpaceParams& sp, double rel_tol) {
  const double recomputed = search_objective(cert.kind, cert.x, cert.y, sp);
  return std::abs(recomputed - cert.value) <= rel_tol * std::max(1.0, std::abs(cert.value));
}

}  // namespace morrey
