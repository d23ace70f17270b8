#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "morrey/lattice.hpp"

namespace morrey {

/// Exponents and dimension of the discrete Morrey space l^p_q(Z^d).
/// Construction enforces 1 <= p <= q < inf and d >= 1.
class SpaceParams {
 public:
  SpaceParams(double p, double q, std::size_t d);

  double p() const noexcept { return p_; }
  double q() const noexcept { return q_; }
  std::size_t d() const noexcept { return d_; }

  /// 1/q - 1/p, the (non-positive) exponent applied to |S_{m,N}|.
  double weight_exponent() const noexcept { return 1.0 / q_ - 1.0 / p_; }

  /// Throws DomainError unless p < q.
  void require_strict() const;

 private:
  double p_;
  double q_;
  std::size_t d_;
};

enum class Engine { automatic, naive, prefix };

std::string_view engine_name(Engine e);
/// Accepts "auto", "naive", "prefix"; throws ArgumentError otherwise.
Engine parse_engine(std::string_view name);

struct WindowValue {
  Window window;
  double value = 0.0;
};

struct NormResult {
  double norm = 0.0;
  WindowValue argmax;
  Engine engine = Engine::naive;
};

inline constexpr std::uint64_t kDefaultCellBudget = 100'000'000;

struct NormOptions {
  Engine engine = Engine::automatic;
  /// Largest padded dense box (in cells) the prefix engine may allocate.
  std::uint64_t cell_budget = kDefaultCellBudget;
  /// 0 means thread_limit().
  unsigned threads = 0;
};

/// |S_{m,N}|^{1/q-1/p} for a window of radius N in Z^d.
double window_weight(Coord radius, const SpaceParams& sp);

/// |S|^{1/q-1/p} (sum_{k in S} |x(k)|^p)^{1/p} for the window S = w.
double window_value(const SparseSequence& x, const Window& w, const SpaceParams& sp);

/// ceil(max_extent / 2): the smallest radius at which one window covers the support.
/// The supremum over all windows is attained at some N <= n_max(x). For p < q every
/// window of radius N > n_max is bounded by (2N+1)^{d(1/q-1/p)} ||x||_p, which is
/// strictly below the value of a covering window of radius n_max; for p = q the
/// covering window already holds the full p-sum. Throws DomainError for x = 0.
Coord n_max(const SparseSequence& x);

/// Cells of the support box padded by n_max on every side; saturates at UINT64_MAX.
std::uint64_t padded_box_cells(const SparseSequence& x);

/// Enumerates every window with N in [0, radius_limit] (default n_max) whose center
/// lies in the support box padded by N. Ties go to the lexicographically smallest
/// (N, center).
NormResult norm_naive(const SparseSequence& x, const SpaceParams& sp, unsigned threads = 1,
                      std::optional<Coord> radius_limit = std::nullopt);

/// Same window family as norm_naive, with each p-sum read from a summed-area table
/// of |x|^p in O(2^d). Throws ResourceError when padded_box_cells(x) > cell_budget.
NormResult norm_prefix(const SparseSequence& x, const SpaceParams& sp,
                       std::uint64_t cell_budget = kDefaultCellBudget, unsigned threads = 1);

/// Dispatches on options.engine; automatic picks prefix whenever the padded box fits the budget.
NormResult norm(const SparseSequence& x, const SpaceParams& sp, const NormOptions& options = {});

}  // namespace morrey
