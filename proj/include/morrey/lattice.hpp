#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace morrey {

using Coord = std::int64_t;

/// A point of the integer lattice Z^d.
class LatticePoint {
 public:
  LatticePoint() = default;
  explicit LatticePoint(std::vector<Coord> coords);
  LatticePoint(std::initializer_list<Coord> coords) : coords_(coords) {}

  /// The origin of Z^d.
  static LatticePoint origin(std::size_t dim) { return LatticePoint(std::vector<Coord>(dim, 0)); }

  std::size_t dim() const noexcept { return coords_.size(); }
  Coord operator[](std::size_t axis) const { return coords_[axis]; }
  std::span<const Coord> coords() const noexcept { return coords_; }

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;

 private:
  std::vector<Coord> coords_;
};

/// Max-norm distance between two points of equal dimension.
Coord chebyshev_distance(const LatticePoint& a, const LatticePoint& b);

/// The cube of lattice points within max-norm distance `radius` of `center`.
struct Window {
  LatticePoint center;
  Coord radius = 0;

  friend bool operator==(const Window&, const Window&) = default;
};

/// Number of lattice points in a window of radius N in Z^d, i.e. (2N+1)^d.
/// Throws SizeError when the count does not fit in 64 bits.
std::uint64_t cardinality(const Window& w, std::size_t dim);
std::uint64_t cardinality(Coord radius, std::size_t dim);

/// Throws ArgumentError on dimension mismatch.
bool window_contains(const Window& w, const LatticePoint& k);

/// Componentwise min/max of a support. `empty` is set for the zero sequence,
/// in which case lo and hi are left zero-dimensional.
struct BoundingBox {
  LatticePoint lo;
  LatticePoint hi;
  bool empty = true;

  Coord extent(std::size_t axis) const { return hi[axis] - lo[axis]; }
  Coord max_extent() const;
  bool contains(const LatticePoint& k) const;
};

/// A finitely supported real sequence on Z^d. Exact zeros are never stored.
class SparseSequence {
 public:
  using Map = std::map<LatticePoint, double>;

  explicit SparseSequence(std::size_t dim);
  /// Zero values in `entries` are dropped; throws ArgumentError if a key has the wrong length.
  SparseSequence(std::size_t dim, Map entries);
  SparseSequence(std::size_t dim, std::initializer_list<std::pair<const LatticePoint, double>> entries);

  std::size_t dim() const noexcept { return dim_; }
  const Map& entries() const noexcept { return entries_; }
  std::size_t support_size() const noexcept { return entries_.size(); }
  bool is_zero() const noexcept { return entries_.empty(); }

  /// Value at k (0 off the support).
  double at(const LatticePoint& k) const;

  friend bool operator==(const SparseSequence&, const SparseSequence&) = default;

 private:
  std::size_t dim_;
  Map entries_;
};

BoundingBox support_box(const SparseSequence& x);

/// Pointwise x + sign * y with exact zeros dropped. `sign` must be +1 or -1.
SparseSequence combine(const SparseSequence& x, const SparseSequence& y, int sign);

/// Pointwise lambda * x.
SparseSequence scale(const SparseSequence& x, double lambda);

/// x translated by the lattice vector t: (shift(x, t))(k + t) = x(k).
SparseSequence shift(const SparseSequence& x, const LatticePoint& t);

}  // namespace morrey
