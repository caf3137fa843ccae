#pragma once

// Test-only brute-force oracles and random BPA generators. The oracles
// enumerate the full power set and evaluate the defining sums directly
// (long double for the multiscale path), independent of the sparse
// implementations they check.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <utility>
#include <random>
#include <string>
#include <vector>

#include "mulp/core.hpp"

namespace oracle {

using mulp::Frame;
using mulp::MassFunction;
using mulp::SubsetMask;

inline double bel(const MassFunction& m, SubsetMask a) {
  const std::uint64_t full = m.frame().full_mask().bits;
  double sum = 0.0;
  for (std::uint64_t b = 1; b <= full; ++b)
    if ((b & ~a.bits) == 0) sum += m.mass(SubsetMask{b});
  return sum;
}

inline double pl(const MassFunction& m, SubsetMask a) {
  const std::uint64_t full = m.frame().full_mask().bits;
  double sum = 0.0;
  for (std::uint64_t b = 1; b <= full; ++b)
    if ((b & a.bits) != 0) sum += m.mass(SubsetMask{b});
  return sum;
}

inline std::vector<double> betp(const MassFunction& m) {
  const std::size_t n = m.frame().size();
  const std::uint64_t full = m.frame().full_mask().bits;
  const double scale = 1.0 / (1.0 - m.empty_mass());
  std::vector<double> probs(n, 0.0);
  for (std::uint64_t a = 1; a <= full; ++a) {
    const double mass = m.mass(SubsetMask{a});
    if (mass == 0.0) continue;
    const int card = std::popcount(a);
    for (std::size_t i = 0; i < n; ++i)
      if ((a >> i) & 1u) probs[i] += mass * scale / card;
  }
  return probs;
}

// Direct long-double evaluation of the multiscale sum without the
// max-ratio stabilization used by the implementation.
inline std::vector<double> mulp_direct(const MassFunction& m, double q) {
  const std::size_t n = m.frame().size();
  const std::uint64_t full = m.frame().full_mask().bits;
  const long double scale = 1.0L / (1.0L - static_cast<long double>(m.empty_mass()));

  std::vector<long double> diff(n);
  for (std::size_t i = 0; i < n; ++i) {
    const SubsetMask s = SubsetMask::singleton(i);
    diff[i] = static_cast<long double>(pl(m, s)) - static_cast<long double>(bel(m, s));
  }

  std::vector<long double> probs(n, 0.0L);
  for (std::uint64_t a = 1; a <= full; ++a) {
    const long double mass = static_cast<long double>(m.mass(SubsetMask{a}));
    if (mass == 0.0L) continue;
    if (std::popcount(a) == 1) {
      probs[static_cast<std::size_t>(std::countr_zero(a))] += mass * scale;
      continue;
    }
    long double denom = 0.0L;
    for (std::size_t i = 0; i < n; ++i)
      if ((a >> i) & 1u) denom += (q == 0.0) ? 1.0L : std::pow(diff[i], static_cast<long double>(q));
    for (std::size_t i = 0; i < n; ++i) {
      if (!((a >> i) & 1u)) continue;
      const long double num = (q == 0.0) ? 1.0L : std::pow(diff[i], static_cast<long double>(q));
      probs[i] += num / denom * mass * scale;
    }
  }
  return std::vector<double>(probs.begin(), probs.end());
}

inline Frame random_frame(std::mt19937_64& rng, std::size_t max_n) {
  std::uniform_int_distribution<std::size_t> nd(1, max_n);
  const std::size_t n = nd(rng);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  return Frame(labels);
}

// Random sparse BPA: up to max_focal distinct non-empty focal sets with
// normalized uniform masses.
inline MassFunction random_bpa(std::mt19937_64& rng, const Frame& frame,
                               std::size_t max_focal = 6) {
  const std::uint64_t full = frame.full_mask().bits;
  std::uniform_int_distribution<std::uint64_t> subset(1, full);
  std::uniform_real_distribution<double> unit(0.05, 1.0);

  std::vector<std::uint64_t> chosen;
  const std::size_t avail =
      full < max_focal ? static_cast<std::size_t>(full) : max_focal;
  const std::size_t want =
      std::uniform_int_distribution<std::size_t>(1, avail)(rng);
  while (chosen.size() < want) {
    const std::uint64_t s = subset(rng);
    if (std::find(chosen.begin(), chosen.end(), s) == chosen.end())
      chosen.push_back(s);
  }

  std::vector<std::pair<SubsetMask, double>> entries;
  double sum = 0.0;
  for (std::uint64_t s : chosen) {
    const double v = unit(rng);
    entries.emplace_back(SubsetMask{s}, v);
    sum += v;
  }
  for (auto& [s, v] : entries) v /= sum;
  return MassFunction(frame, entries);
}

// Random Bayesian BPA: every focal set a singleton.
inline MassFunction random_bayesian_bpa(std::mt19937_64& rng, const Frame& frame) {
  std::uniform_real_distribution<double> unit(0.05, 1.0);
  std::vector<std::pair<SubsetMask, double>> entries;
  double sum = 0.0;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    const double v = unit(rng);
    entries.emplace_back(SubsetMask::singleton(i), v);
    sum += v;
  }
  for (auto& [s, v] : entries) v /= sum;
  return MassFunction(frame, entries);
}

}  // namespace oracle
