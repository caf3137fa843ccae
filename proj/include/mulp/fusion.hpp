#pragma once

// Dempster's rule of combination for multi-source ingestion.

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "mulp/core.hpp"

namespace mulp {

// Mass assigned to the empty set before normalization.
struct ConflictReport {
  double k = 0.0;
};

// Classic Dempster combination: m(A) = sum_{B ∩ C = A} m1(B) m2(C) / (1 - k).
// Requires identical frames and strict-mode inputs (no mass on the empty set).
inline std::pair<MassFunction, ConflictReport> combine(const MassFunction& m1,
                                                       const MassFunction& m2) {
  if (!(m1.frame() == m2.frame()))
    throw ValidationError("cannot combine mass functions over different frames");
  if (m1.empty_mass() > 0.0 || m2.empty_mass() > 0.0)
    throw ValidationError("combination requires BPAs with m(empty) = 0");

  // Products are gathered per output set and summed in sorted order so
  // the result is identical regardless of argument order.
  std::map<SubsetMask, std::vector<double>> products;
  std::vector<double> conflict;
  for (const auto& [b, mb] : m1.focal_sets()) {
    for (const auto& [c, mc] : m2.focal_sets()) {
      const SubsetMask a = b.intersect(c);
      const double p = mb * mc;
      if (a.is_empty())
        conflict.push_back(p);
      else
        products[a].push_back(p);
    }
  }
  auto sorted_sum = [](std::vector<double>& v) {
    std::sort(v.begin(), v.end());
    double sum = 0.0;
    for (double x : v) sum += x;
    return sum;
  };
  const double k = sorted_sum(conflict);
  if (k >= 1.0)
    throw MathError("total conflict (k = 1): combination undefined");

  std::vector<std::pair<SubsetMask, double>> entries;
  entries.reserve(products.size());
  for (auto& [a, ps] : products) entries.emplace_back(a, sorted_sum(ps) / (1.0 - k));
  return {MassFunction(m1.frame(), entries), ConflictReport{k}};
}

// n-way fusion as a left fold of pairwise combination; the per-step
// conflicts are reported in order.
inline std::pair<MassFunction, std::vector<ConflictReport>> combine_all(
    const std::vector<MassFunction>& sources) {
  if (sources.empty())
    throw ValidationError("combination requires at least one source");
  MassFunction acc = sources.front();
  std::vector<ConflictReport> conflicts;
  for (std::size_t i = 1; i < sources.size(); ++i) {
    auto [next, report] = combine(acc, sources[i]);
    acc = std::move(next);
    conflicts.push_back(report);
  }
  return {std::move(acc), std::move(conflicts)};
}

}  // namespace mulp
