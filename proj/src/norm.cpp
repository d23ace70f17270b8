#include "morrey/norm.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "morrey/error.hpp"
#include "morrey/parallel.hpp"

namespace morrey {

namespace {

// Below this many windows the sweep stays on the calling thread.
constexpr std::uint64_t kParallelWindowThreshold = 1u << 16;

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) return std::numeric_limits<std::uint64_t>::max();
  return out;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) return std::numeric_limits<std::uint64_t>::max();
  return out;
}

// Support flattened for the sweeps: coordinates row by row, and |x(k)|^p.
struct PoweredSupport {
  std::size_t dim = 0;
  std::vector<Coord> coords;
  std::vector<double> powered;

  PoweredSupport(const SparseSequence& x, double p) : dim(x.dim()) {
    coords.reserve(x.support_size() * dim);
    powered.reserve(x.support_size());
    for (const auto& [k, v] : x.entries()) {
      coords.insert(coords.end(), k.coords().begin(), k.coords().end());
      powered.push_back(std::pow(std::abs(v), p));
    }
  }

  std::size_t size() const { return powered.size(); }
};

std::uint64_t windows_at_radius(const BoundingBox& box, Coord radius) {
  std::uint64_t count = 1;
  for (std::size_t j = 0; j < box.lo.dim(); ++j) {
    count = saturating_mul(count, static_cast<std::uint64_t>(box.extent(j) + 2 * radius + 1));
  }
  return count;
}

double value_from_sum(double p_sum, Coord radius, const SpaceParams& sp) {
  if (p_sum <= 0.0) return 0.0;
  return window_weight(radius, sp) * std::pow(p_sum, 1.0 / sp.p());
}

// Visits every center of radius N in lexicographic order, keeping the first maximum.
template <typename SumFn>
WindowValue sweep_radius(const BoundingBox& box, Coord radius, const SpaceParams& sp,
                         SumFn&& window_sum) {
  const std::size_t dim = box.lo.dim();
  std::vector<Coord> center(dim);
  for (std::size_t j = 0; j < dim; ++j) center[j] = box.lo[j] - radius;

  WindowValue best{Window{LatticePoint(center), radius}, -1.0};
  while (true) {
    const double value = value_from_sum(window_sum(center, radius), radius, sp);
    if (value > best.value) {
      best.value = value;
      best.window.center = LatticePoint(center);
    }
    std::size_t axis = dim;
    while (axis > 0) {
      --axis;
      if (++center[axis] <= box.hi[axis] + radius) break;
      center[axis] = box.lo[axis] - radius;
      if (axis == 0) return best;
    }
  }
}

template <typename SumFn>
NormResult sweep_all(const SparseSequence& x, const SpaceParams& sp, Coord radius_limit,
                     unsigned threads, Engine engine, SumFn&& window_sum) {
  const BoundingBox box = support_box(x);
  std::uint64_t total = 0;
  for (Coord n = 0; n <= radius_limit; ++n) total = saturating_add(total, windows_at_radius(box, n));
  if (threads == 0) threads = thread_limit();
  if (total < kParallelWindowThreshold) threads = 1;

  std::vector<WindowValue> per_radius(static_cast<std::size_t>(radius_limit) + 1);
  parallel_for(per_radius.size(), threads, [&](std::size_t n) {
    per_radius[n] = sweep_radius(box, static_cast<Coord>(n), sp, window_sum);
  });

  // Ascending N with strict improvement keeps the lexicographically smallest (N, center).
  NormResult result;
  result.engine = engine;
  result.argmax = per_radius.front();
  for (const auto& candidate : per_radius) {
    if (candidate.value > result.argmax.value) result.argmax = candidate;
  }
  result.norm = result.argmax.value;
  return result;
}

NormResult zero_norm(const SparseSequence& x, Engine engine) {
  return NormResult{0.0, WindowValue{Window{LatticePoint::origin(x.dim()), 0}, 0.0}, engine};
}

void require_dims(const SparseSequence& x, const SpaceParams& sp) {
  if (x.dim() != sp.d()) {
    throw ArgumentError("sequence dimension " + std::to_string(x.dim()) +
                        " does not match space dimension " + std::to_string(sp.d()));
  }
}

// d-dimensional summed-area table over the support box with one leading zero
// slab per axis, so the table has (extent_j + 2) entries along axis j.
class SummedAreaTable {
 public:
  SummedAreaTable(const SparseSequence& x, const BoundingBox& box, double p)
      : dim_(x.dim()), lo_(box.lo.coords().begin(), box.lo.coords().end()), shape_(dim_), strides_(dim_) {
    std::size_t cells = 1;
    for (std::size_t j = dim_; j-- > 0;) {
      shape_[j] = static_cast<std::size_t>(box.extent(j)) + 2;
      strides_[j] = cells;
      cells *= shape_[j];
    }
    table_.assign(cells, 0.0);
    for (const auto& [k, v] : x.entries()) {
      std::size_t offset = 0;
      for (std::size_t j = 0; j < dim_; ++j) {
        offset += static_cast<std::size_t>(k[j] - lo_[j] + 1) * strides_[j];
      }
      table_[offset] = std::pow(std::abs(v), p);
    }
    for (std::size_t j = 0; j < dim_; ++j) {
      const std::size_t stride = strides_[j];
      for (std::size_t i = 0; i < cells; ++i) {
        if ((i / stride) % shape_[j] != 0) table_[i] += table_[i - stride];
      }
    }
  }

  /// Sum of |x|^p over the cube of the given radius around center, clipped to the box.
  double cube_sum(const std::vector<Coord>& center, Coord radius) const {
    // Table indices of the inclusive range [a, b] on each axis, shifted by the zero slab.
    std::vector<std::size_t> below(dim_), top(dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      const Coord hi = static_cast<Coord>(shape_[j]) - 2;
      const Coord a = std::max<Coord>(center[j] - radius - lo_[j], 0);
      const Coord b = std::min<Coord>(center[j] + radius - lo_[j], hi);
      if (a > b) return 0.0;
      below[j] = static_cast<std::size_t>(a);
      top[j] = static_cast<std::size_t>(b) + 1;
    }
    double sum = 0.0;
    const std::size_t corners = std::size_t{1} << dim_;
    for (std::size_t mask = 0; mask < corners; ++mask) {
      std::size_t offset = 0;
      int lower = 0;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (mask & (std::size_t{1} << j)) {
          offset += top[j] * strides_[j];
        } else {
          offset += below[j] * strides_[j];
          ++lower;
        }
      }
      sum += (lower % 2 == 0 ? 1.0 : -1.0) * table_[offset];
    }
    return sum > 0.0 ? sum : 0.0;
  }

 private:
  std::size_t dim_;
  std::vector<Coord> lo_;
  std::vector<std::size_t> shape_;
  std::vector<std::size_t> strides_;
  std::vector<double> table_;
};

}  // namespace

SpaceParams::SpaceParams(double p, double q, std::size_t d) : p_(p), q_(q), d_(d) {
  if (!std::isfinite(p) || !std::isfinite(q)) throw DomainError("exponents p and q must be finite");
  if (p < 1.0) throw DomainError("exponent p must satisfy p >= 1, got " + std::to_string(p));
  if (q < p) throw DomainError("exponents must satisfy p <= q");
  if (d == 0) throw DomainError("dimension d must be at least 1");
}

void SpaceParams::require_strict() const {
  if (!(p_ < q_)) throw DomainError("witness requires p < q");
}

std::string_view engine_name(Engine e) {
  switch (e) {
    case Engine::automatic: return "auto";
    case Engine::naive: return "naive";
    case Engine::prefix: return "prefix";
  }
  return "unknown";
}

Engine parse_engine(std::string_view name) {
  if (name == "auto") return Engine::automatic;
  if (name == "naive") return Engine::naive;
  if (name == "prefix") return Engine::prefix;
  throw ArgumentError("unknown engine '" + std::string(name) + "' (expected auto|naive|prefix)");
}

double window_weight(Coord radius, const SpaceParams& sp) {
  if (radius == 0 || sp.weight_exponent() == 0.0) return 1.0;
  const double log_card = static_cast<double>(sp.d()) * std::log(2.0 * static_cast<double>(radius) + 1.0);
  return std::exp(sp.weight_exponent() * log_card);
}

double window_value(const SparseSequence& x, const Window& w, const SpaceParams& sp) {
  require_dims(x, sp);
  if (w.center.dim() != x.dim()) throw ArgumentError("window_value: dimension mismatch");
  if (w.radius < 0) throw ArgumentError("window_value: negative radius");
  double sum = 0.0;
  for (const auto& [k, v] : x.entries()) {
    if (chebyshev_distance(k, w.center) <= w.radius) sum += std::pow(std::abs(v), sp.p());
  }
  return value_from_sum(sum, w.radius, sp);
}

Coord n_max(const SparseSequence& x) {
  if (x.is_zero()) throw DomainError("n_max: undefined for the zero sequence");
  const Coord extent = support_box(x).max_extent();
  return extent / 2 + extent % 2;
}

std::uint64_t padded_box_cells(const SparseSequence& x) {
  if (x.is_zero()) return 0;
  const BoundingBox box = support_box(x);
  const auto pad = static_cast<std::uint64_t>(n_max(x));
  std::uint64_t cells = 1;
  for (std::size_t j = 0; j < x.dim(); ++j) {
    const std::uint64_t side =
        saturating_add(static_cast<std::uint64_t>(box.extent(j)) + 1, saturating_mul(2, pad));
    cells = saturating_mul(cells, side);
  }
  return cells;
}

NormResult norm_naive(const SparseSequence& x, const SpaceParams& sp, unsigned threads,
                      std::optional<Coord> radius_limit) {
  require_dims(x, sp);
  if (x.is_zero()) return zero_norm(x, Engine::naive);
  const Coord limit = radius_limit.value_or(n_max(x));
  if (limit < 0) throw ArgumentError("norm_naive: negative radius limit");

  const PoweredSupport support(x, sp.p());
  const std::size_t dim = support.dim;
  auto window_sum = [&](const std::vector<Coord>& center, Coord radius) {
    double sum = 0.0;
    for (std::size_t i = 0; i < support.size(); ++i) {
      const Coord* k = &support.coords[i * dim];
      bool inside = true;
      for (std::size_t j = 0; j < dim && inside; ++j) inside = std::abs(k[j] - center[j]) <= radius;
      if (inside) sum += support.powered[i];
    }
    return sum;
  };
  return sweep_all(x, sp, limit, threads, Engine::naive, window_sum);
}

NormResult norm_prefix(const SparseSequence& x, const SpaceParams& sp, std::uint64_t cell_budget,
                       unsigned threads) {
  require_dims(x, sp);
  if (x.is_zero()) return zero_norm(x, Engine::prefix);
  const std::uint64_t cells = padded_box_cells(x);
  if (cells > cell_budget) {
    throw ResourceError("padded support box needs " + std::to_string(cells) +
                        " cells, over the budget of " + std::to_string(cell_budget) +
                        "; use the naive engine");
  }
  const BoundingBox box = support_box(x);
  const SummedAreaTable table(x, box, sp.p());
  auto window_sum = [&](const std::vector<Coord>& center, Coord radius) {
    return table.cube_sum(center, radius);
  };
  return sweep_all(x, sp, n_max(x), threads, Engine::prefix, window_sum);
}

NormResult norm(const SparseSequence& x, const SpaceParams& sp, const NormOptions& options) {
  switch (options.engine) {
    case Engine::naive:
      return norm_naive(x, sp, options.threads);
    case Engine::prefix:
      return norm_prefix(x, sp, options.cell_budget, options.threads);
    case Engine::automatic:
      break;
  }
  if (padded_box_cells(x) <= options.cell_budget) {
    return norm_prefix(x, sp, options.cell_budget, options.threads);
  }
  return norm_naive(x, sp, options.threads);
}

}  // namespace morrey
