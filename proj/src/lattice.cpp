#include "morrey/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "morrey/error.hpp"

namespace morrey {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw ArgumentError(std::string(what) + ": dimension mismatch (" + std::to_string(a) + " vs " +
                        std::to_string(b) + ")");
  }
}

}  // namespace

LatticePoint::LatticePoint(std::vector<Coord> coords) : coords_(std::move(coords)) {}

Coord chebyshev_distance(const LatticePoint& a, const LatticePoint& b) {
  require_same_dim(a.dim(), b.dim(), "chebyshev_distance");
  Coord best = 0;
  for (std::size_t j = 0; j < a.dim(); ++j) {
    best = std::max(best, std::abs(a[j] - b[j]));
  }
  return best;
}

std::uint64_t cardinality(Coord radius, std::size_t dim) {
  if (radius < 0) throw ArgumentError("cardinality: negative radius");
  if (radius > (INT64_MAX - 1) / 2) throw SizeError("cardinality: side length 2N+1 overflows");
  const auto side = static_cast<std::uint64_t>(2 * radius + 1);
  std::uint64_t count = 1;
  for (std::size_t j = 0; j < dim; ++j) {
    if (__builtin_mul_overflow(count, side, &count)) {
      throw SizeError("cardinality: (2N+1)^d overflows 64 bits for N=" + std::to_string(radius) +
                      ", d=" + std::to_string(dim));
    }
  }
  return count;
}

std::uint64_t cardinality(const Window& w, std::size_t dim) { return cardinality(w.radius, dim); }

bool window_contains(const Window& w, const LatticePoint& k) {
  require_same_dim(w.center.dim(), k.dim(), "window_contains");
  return chebyshev_distance(w.center, k) <= w.radius;
}

Coord BoundingBox::max_extent() const {
  Coord best = 0;
  if (empty) return best;
  for (std::size_t j = 0; j < lo.dim(); ++j) best = std::max(best, extent(j));
  return best;
}

bool BoundingBox::contains(const LatticePoint& k) const {
  if (empty) return false;
  require_same_dim(lo.dim(), k.dim(), "BoundingBox::contains");
  for (std::size_t j = 0; j < k.dim(); ++j) {
    if (k[j] < lo[j] || k[j] > hi[j]) return false;
  }
  return true;
}

SparseSequence::SparseSequence(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw ArgumentError("SparseSequence: dimension must be at least 1");
}

SparseSequence::SparseSequence(std::size_t dim, Map entries) : SparseSequence(dim) {
  for (auto& [k, v] : entries) {
    require_same_dim(dim, k.dim(), "SparseSequence");
  }
  std::erase_if(entries, [](const auto& kv) { return kv.second == 0.0; });
  entries_ = std::move(entries);
}

SparseSequence::SparseSequence(std::size_t dim,
                               std::initializer_list<std::pair<const LatticePoint, double>> entries)
    : SparseSequence(dim, Map(entries)) {}

double SparseSequence::at(const LatticePoint& k) const {
  auto it = entries_.find(k);
  return it == entries_.end() ? 0.0 : it->second;
}

BoundingBox support_box(const SparseSequence& x) {
  BoundingBox box;
  if (x.is_zero()) return box;
  std::vector<Coord> lo(x.dim(), INT64_MAX);
  std::vector<Coord> hi(x.dim(), INT64_MIN);
  for (const auto& [k, v] : x.entries()) {
    for (std::size_t j = 0; j < x.dim(); ++j) {
      lo[j] = std::min(lo[j], k[j]);
      hi[j] = std::max(hi[j], k[j]);
    }
  }
  box.lo = LatticePoint(std::move(lo));
  box.hi = LatticePoint(std::move(hi));
  box.empty = false;
  return box;
}

SparseSequence combine(const SparseSequence& x, const SparseSequence& y, int sign) {
  require_same_dim(x.dim(), y.dim(), "combine");
  if (sign != 1 && sign != -1) throw ArgumentError("combine: sign must be +1 or -1");
  SparseSequence::Map out = x.entries();
  for (const auto& [k, v] : y.entries()) {
    out[k] += sign * v;
  }
  return SparseSequence(x.dim(), std::move(out));
}

SparseSequence scale(const SparseSequence& x, double lambda) {
  SparseSequence::Map out;
  for (const auto& [k, v] : x.entries()) out.emplace_hint(out.end(), k, lambda * v);
  return SparseSequence(x.dim(), std::move(out));
}

SparseSequence shift(const SparseSequence& x, const LatticePoint& t) {
  require_same_dim(x.dim(), t.dim(), "shift");
  SparseSequence::Map out;
  for (const auto& [k, v] : x.entries()) {
    std::vector<Coord> moved(k.coords().begin(), k.coords().end());
    for (std::size_t j = 0; j < moved.size(); ++j) moved[j] += t[j];
    out.emplace(LatticePoint(std::move(moved)), v);
  }
  return SparseSequence(x.dim(), std::move(out));
}

}  // namespace morrey
