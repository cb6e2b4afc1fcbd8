#ifndef MORRAP_LATTICE_HPP
#define MORRAP_LATTICE_HPP

#include <cstdint>
#include <span>
#include <thread>
#include <utility>
#include <vector>

#include "morrap/model.hpp"

namespace morrap {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

struct SolverOptions {
  unsigned workers = 0;  ///< 0 picks MORRAP_WORKERS or the hardware concurrency
  std::uint64_t budget = kDefaultBudget;
};

/// Worker count after resolving 0 against the environment.
unsigned resolve_workers(unsigned requested);

/// Objectives of one lattice point as seen by a scan.
struct ScanPoint {
  std::uint64_t index = 0;        ///< lexicographic rank in the lattice
  std::span<const int> levels;    ///< n_1..n_m
  double reliability = 0.0;
  double cost = 0.0;
  double volume = 0.0;
  double weight = 0.0;

  Objectives objectives() const noexcept { return {reliability, cost}; }
};

/// The integer box prod [1, n_max_i] with per-subsystem terms tabulated once.
/// Scans accumulate the terms left to right exactly as evaluate() does, so
/// objectives found by a scan equal evaluate() bit for bit.
class DesignLattice {
 public:
  /// Throws Error(budget) when the box holds more than `budget` designs.
  explicit DesignLattice(const ProblemInstance& inst, std::uint64_t budget = kDefaultBudget);

  std::uint64_t cardinality() const noexcept { return cardinality_; }
  std::size_t dimension() const noexcept { return caps_.size(); }
  DesignVector decode(std::uint64_t index) const;

  /// Calls fn(const ScanPoint&) for every feasible design with rank in
  /// [begin, end), in lexicographic order.
  template <class Fn>
  void scan(std::uint64_t begin, std::uint64_t end, Fn&& fn) const;

 private:
  struct Terms {
    std::vector<double> reliability, cost, volume, weight;  // indexed by n - 1
  };

  std::vector<int> caps_;
  std::vector<Terms> terms_;
  std::uint64_t cardinality_ = 1;
  double volume_limit_ = 0.0;
  double weight_limit_ = 0.0;
  bool bounds_ok_ = true;  // all reliabilities inside their [r_min, r_max]
};

template <class Fn>
void DesignLattice::scan(std::uint64_t begin, std::uint64_t end, Fn&& fn) const {
  if (!bounds_ok_ || begin >= end) return;
  const std::size_t m = caps_.size();
  std::vector<int> levels = decode(begin).n;
  // prefix[k] accumulates subsystems 0..k-1.
  std::vector<double> pr(m + 1), pc(m + 1), pv(m + 1), pw(m + 1);
  pr[0] = 1.0;
  pc[0] = pv[0] = pw[0] = 0.0;
  auto refresh = [&](std::size_t from) {
    for (std::size_t i = from; i < m; ++i) {
      const Terms& t = terms_[i];
      const std::size_t k = static_cast<std::size_t>(levels[i] - 1);
      pr[i + 1] = pr[i] * t.reliability[k];
      pc[i + 1] = pc[i] + t.cost[k];
      pv[i + 1] = pv[i] + t.volume[k];
      pw[i + 1] = pw[i] + t.weight[k];
    }
  };
  refresh(0);
  ScanPoint p;
  p.levels = levels;
  for (std::uint64_t idx = begin;;) {
    if (pv[m] <= volume_limit_ && pw[m] <= weight_limit_) {
      p.index = idx;
      p.reliability = pr[m];
      p.cost = pc[m];
      p.volume = pv[m];
      p.weight = pw[m];
      fn(static_cast<const ScanPoint&>(p));
    }
    if (++idx >= end) break;
    std::size_t j = m;
    while (j-- > 0) {
      if (levels[j] < caps_[j]) {
        ++levels[j];
        break;
      }
      levels[j] = 1;
    }
    refresh(j);
  }
}

/// Splits the lattice into contiguous rank chunks, scans each on its own
/// thread into a fresh accumulator, and folds the accumulators in chunk
/// order. Deterministic whenever `merge` prefers its left operand on ties.
template <class Acc, class Make, class Visit, class Merge>
Acc parallel_scan(const DesignLattice& lattice, unsigned workers, Make make, Visit visit,
                  Merge merge) {
  const std::uint64_t total = lattice.cardinality();
  std::uint64_t chunks = resolve_workers(workers);
  if (chunks > total) chunks = total;
  if (chunks == 0) chunks = 1;
  std::vector<Acc> partial;
  partial.reserve(chunks);
  for (std::uint64_t c = 0; c < chunks; ++c) partial.push_back(make());
  auto run = [&](std::uint64_t c) {
    const std::uint64_t b = total * c / chunks;
    const std::uint64_t e = total * (c + 1) / chunks;
    Acc& acc = partial[c];
    lattice.scan(b, e, [&](const ScanPoint& p) { visit(acc, p); });
  };
  if (chunks == 1) {
    run(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(chunks);
    for (std::uint64_t c = 0; c < chunks; ++c) threads.emplace_back(run, c);
  }
  Acc result = std::move(partial[0]);
  for (std::uint64_t c = 1; c < chunks; ++c) merge(result, std::move(partial[c]));
  return result;
}

/// Running optimum of a scalar score with lexicographic tie-breaking and a
/// count of designs sharing the optimal score.
struct BestTracker {
  bool maximize = false;
  bool found = false;
  double score = 0.0;
  std::uint64_t index = 0;
  std::uint64_t ties = 0;

  // Scans visit ranks in increasing order, so the first of equal scores wins.
  void offer(double s, std::uint64_t idx) {
    if (!found || (maximize ? s > score : s < score)) {
      found = true;
      score = s;
      index = idx;
      ties = 1;
    } else if (s == score) {
      ++ties;
    }
  }

  // `later` covers ranks after this tracker's.
  void merge(const BestTracker& later) {
    if (!later.found) return;
    if (!found || (maximize ? later.score > score : later.score < score)) {
      *this = later;
    } else if (later.score == score) {
      ties += later.ties;
    }
  }
};

}  // namespace morrap

#endif  // MORRAP_LATTICE_HPP
