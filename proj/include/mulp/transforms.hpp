#pragma once

// BPA -> probability transformations: the pignistic transform and its
// q-parameterized multiscale generalization, plus q-sweeps, decision
// ranking and ranking-crossover search.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mulp/core.hpp"

namespace mulp {

// Per-element probabilities produced by a transform. q is the exponent
// used for the multiscale transform; the pignistic transform reports
// q = 0, to which it is identical.
struct ProbabilityDistribution {
  Frame frame;
  std::vector<double> probs;
  double q = 0.0;
};

// One multiscale distribution per q, qs ascending.
struct SweepTable {
  std::vector<double> qs;
  std::vector<ProbabilityDistribution> rows;
};

// (label, probability) pairs, descending by probability; ties broken by
// frame element order.
struct Ranking {
  std::vector<std::pair<std::string, double>> entries;
};

namespace detail {

inline void require_transformable(const MassFunction& m) {
  if (m.empty_mass() >= 1.0)
    throw MathError("transform undefined when m(empty) = 1");
}

inline void require_valid_q(double q) {
  if (!std::isfinite(q) || q < 0.0)
    throw ValidationError("q must be finite and non-negative (got " +
                          std::to_string(q) + ")");
}

}  // namespace detail

// BetP(w) = sum over focal A containing w of m(A) / (|A| * (1 - m(empty))).
inline ProbabilityDistribution pignistic(const MassFunction& m) {
  detail::require_transformable(m);
  const Frame& frame = m.frame();
  const double scale = 1.0 / (1.0 - m.empty_mass());
  std::vector<double> probs(frame.size(), 0.0);
  for (const auto& [a, mass] : m.focal_sets()) {
    if (a.is_empty()) continue;
    const double share = mass * scale / a.cardinality();
    for (std::size_t i = 0; i < frame.size(); ++i)
      if (a.contains(i)) probs[i] += share;
  }
  return {frame, std::move(probs), 0.0};
}

// Normalized weights d(w)^q / sum_{alpha in a} d(alpha)^q for the members
// of a, in ascending bit order. A singleton gets weight 1 regardless of
// its diff, and 0^0 = 1 so q = 0 reduces to 1/|a|.
//
// Weights are computed as (d / d_max)^q ratios within the set so large q
// cannot underflow the denominator.
inline std::vector<double> focal_weights(const SingletonIntervals& intervals,
                                         SubsetMask a, double q) {
  if (a.is_empty())
    throw ValidationError("focal weights undefined for the empty set");
  if (!intervals.frame.contains_mask(a))
    throw ValidationError("subset mask uses bits beyond the frame");
  detail::require_valid_q(q);

  if (a.cardinality() == 1) return {1.0};

  std::vector<double> diffs;
  diffs.reserve(static_cast<std::size_t>(a.cardinality()));
  for (std::size_t i = 0; i < intervals.frame.size(); ++i)
    if (a.contains(i)) diffs.push_back(intervals.diff[i]);

  const double dmax = *std::max_element(diffs.begin(), diffs.end());
  // Inside a multi-element focal set every member's diff is >= m(a) > 0,
  // so dmax > 0 whenever a is focal; guard anyway for free-standing calls.
  std::vector<double> weights(diffs.size());
  double sum = 0.0;
  for (std::size_t k = 0; k < diffs.size(); ++k) {
    const double ratio = dmax > 0.0 ? diffs[k] / dmax : 1.0;
    weights[k] = (q == 0.0) ? 1.0 : std::pow(ratio, q);
    sum += weights[k];
  }
  for (double& w : weights) w /= sum;
  return weights;
}

// MulP(w) = sum over focal A containing w of weight_q(w in A) * m(A) / (1 - m(empty)).
inline ProbabilityDistribution multiscale(const MassFunction& m, double q) {
  detail::require_transformable(m);
  detail::require_valid_q(q);
  const Frame& frame = m.frame();
  const SingletonIntervals intervals = m.singleton_intervals();
  const double scale = 1.0 / (1.0 - m.empty_mass());
  std::vector<double> probs(frame.size(), 0.0);
  for (const auto& [a, mass] : m.focal_sets()) {
    if (a.is_empty()) continue;
    const std::vector<double> weights = focal_weights(intervals, a, q);
    std::size_t k = 0;
    for (std::size_t i = 0; i < frame.size(); ++i)
      if (a.contains(i)) probs[i] += weights[k++] * mass * scale;
  }
  return {frame, std::move(probs), q};
}

// One multiscale distribution per q, input order preserved.
inline SweepTable sweep(const MassFunction& m, const std::vector<double>& qs) {
  if (qs.empty()) throw ValidationError("sweep requires at least one q");
  SweepTable table;
  table.qs = qs;
  table.rows.reserve(qs.size());
  for (double q : qs) {
    try {
      table.rows.push_back(multiscale(m, q));
    } catch (const ValidationError& e) {
      throw ValidationError("q=" + std::to_string(q) + ": " + e.what());
    }
  }
  return table;
}

inline Ranking rank(const ProbabilityDistribution& p) {
  std::vector<std::size_t> order(p.frame.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return p.probs[i] > p.probs[j];
  });
  Ranking r;
  r.entries.reserve(order.size());
  for (std::size_t i : order)
    r.entries.emplace_back(p.frame.label(i), p.probs[i]);
  return r;
}

// Searches [q_lo, q_hi] for a q* where MulP_q(x) and MulP_q(y) swap order.
// A grid scan (grid_points samples, endpoints inclusive) locates a sign
// change of MulP_q(x) - MulP_q(y), then bisection narrows it to tol.
// Returns nullopt when no sign change is found on the grid.
inline std::optional<double> find_crossover(const MassFunction& m,
                                            const std::string& x,
                                            const std::string& y, double q_lo,
                                            double q_hi, double tol = 1e-6,
                                            std::size_t grid_points = 64) {
  if (x == y) throw ValidationError("crossover elements must differ");
  const std::size_t xi = m.frame().require_index(x);
  const std::size_t yi = m.frame().require_index(y);
  detail::require_valid_q(q_lo);
  detail::require_valid_q(q_hi);
  if (!(q_lo < q_hi)) throw ValidationError("q_lo must be < q_hi");
  if (!(tol > 0.0)) throw ValidationError("tol must be positive");
  if (grid_points < 2) throw ValidationError("grid must have at least 2 points");

  auto gap = [&](double q) {
    const ProbabilityDistribution p = multiscale(m, q);
    return p.probs[xi] - p.probs[yi];
  };

  double prev_q = q_lo;
  double prev_f = gap(q_lo);
  if (prev_f == 0.0) return q_lo;
  for (std::size_t k = 1; k < grid_points; ++k) {
    const double q = q_lo + (q_hi - q_lo) * static_cast<double>(k) /
                                static_cast<double>(grid_points - 1);
    const double f = gap(q);
    if (f == 0.0) return q;
    if ((prev_f < 0.0) != (f < 0.0)) {
      double lo = prev_q, hi = q, flo = prev_f;
      while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = gap(mid);
        if (fmid == 0.0) return mid;
        if ((flo < 0.0) != (fmid < 0.0)) {
          hi = mid;
        } else {
          lo = mid;
          flo = fmid;
        }
      }
      return 0.5 * (lo + hi);
    }
    prev_q = q;
    prev_f = f;
  }
  return std::nullopt;
}

}  // namespace mulp
