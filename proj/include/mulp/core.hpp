#pragma once

// Frame / mass-function data model for Dempster-Shafer evidence:
// frames up to 64 elements, subsets as bitmasks, sparse BPAs with
// belief, plausibility and singleton-interval computation.

#include <bit>
#include <cmath>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace mulp {

// Data or validation problem in user-supplied evidence.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mathematically undefined request (m(empty) = 1, total conflict, ...).
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kMaxFrameSize = 64;
inline constexpr double kDefaultMassTolerance = 1e-9;

// Subset of a frame encoded as a bitmask; bit i set means element i is
// a member. Only meaningful relative to a Frame.
struct SubsetMask {
  std::uint64_t bits = 0;

  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint64_t b) : bits(b) {}

  static constexpr SubsetMask empty_set() { return SubsetMask{0}; }
  static constexpr SubsetMask singleton(std::size_t i) {
    return SubsetMask{std::uint64_t{1} << i};
  }

  constexpr bool is_empty() const { return bits == 0; }
  constexpr int cardinality() const { return std::popcount(bits); }
  constexpr bool contains(std::size_t i) const {
    return (bits >> i) & 1u;
  }
  constexpr bool is_subset_of(SubsetMask other) const {
    return (bits & ~other.bits) == 0;
  }
  constexpr bool intersects(SubsetMask other) const {
    return (bits & other.bits) != 0;
  }
  constexpr SubsetMask intersect(SubsetMask other) const {
    return SubsetMask{bits & other.bits};
  }
  constexpr SubsetMask unite(SubsetMask other) const {
    return SubsetMask{bits | other.bits};
  }

  constexpr auto operator<=>(const SubsetMask&) const = default;
};

// Ordered set of distinct element labels; order fixes bit positions.
class Frame {
 public:
  explicit Frame(std::vector<std::string> labels)
      : labels_(std::move(labels)) {
    if (labels_.empty())
      throw ValidationError("frame must contain at least one element");
    if (labels_.size() > kMaxFrameSize)
      throw ValidationError("frame exceeds " +
                            std::to_string(kMaxFrameSize) + " elements");
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i].empty())
        throw ValidationError("frame label at position " +
                              std::to_string(i) + " is empty");
      auto [it, inserted] = index_.emplace(labels_[i], i);
      if (!inserted)
        throw ValidationError("duplicate frame label '" + labels_[i] + "'");
    }
  }

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<std::size_t> index_of(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  // Index of a label, or ValidationError if unknown.
  std::size_t require_index(std::string_view label) const {
    auto idx = index_of(label);
    if (!idx)
      throw ValidationError("unknown element '" + std::string(label) + "'");
    return *idx;
  }

  SubsetMask full_mask() const {
    return SubsetMask{labels_.size() == kMaxFrameSize
                          ? ~std::uint64_t{0}
                          : (std::uint64_t{1} << labels_.size()) - 1};
  }

  bool contains_mask(SubsetMask a) const {
    return a.is_subset_of(full_mask());
  }

  // Builds a mask from member labels; unknown labels throw.
  SubsetMask mask_of(const std::vector<std::string>& members) const {
    SubsetMask a;
    for (const auto& l : members)
      a = a.unite(SubsetMask::singleton(require_index(l)));
    return a;
  }

  bool operator==(const Frame& other) const {
    return labels_ == other.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Per-singleton belief, plausibility and interval width d = Pl - Bel.
struct SingletonIntervals {
  Frame frame;
  std::vector<double> bel;
  std::vector<double> pl;
  std::vector<double> diff;
};

// Validated basic probability assignment: sparse map from focal subset
// to strictly positive mass summing to 1. Immutable after construction.
class MassFunction {
 public:
  using FocalMap = std::map<SubsetMask, double>;

  // entries are (subset, mass) pairs; duplicates are rejected, not merged.
  // strict additionally forbids any mass on the empty set.
  MassFunction(Frame frame, const std::vector<std::pair<SubsetMask, double>>& entries,
               bool strict = false, double mass_tolerance = kDefaultMassTolerance)
      : frame_(std::move(frame)) {
    double sum = 0.0;
    for (const auto& [subset, mass] : entries) {
      if (!frame_.contains_mask(subset))
        throw ValidationError("subset mask uses bits beyond the frame");
      if (!std::isfinite(mass))
        throw ValidationError("non-finite mass on focal set");
      if (mass <= 0.0)
        throw ValidationError("mass must be strictly positive (got " +
                              std::to_string(mass) + ")");
      if (subset.is_empty()) {
        if (strict)
          throw ValidationError("mass on the empty set is forbidden in strict mode");
        if (mass >= 1.0)
          throw MathError("m(empty) must be < 1");
      }
      auto [it, inserted] = masses_.emplace(subset, mass);
      if (!inserted)
        throw ValidationError("duplicate focal set in input");
      sum += mass;
    }
    if (std::abs(sum - 1.0) > mass_tolerance)
      throw ValidationError("masses sum to " + std::to_string(sum) +
                            ", expected 1");
  }

  const Frame& frame() const { return frame_; }
  const FocalMap& focal_sets() const { return masses_; }
  std::size_t focal_count() const { return masses_.size(); }

  double mass(SubsetMask a) const {
    auto it = masses_.find(a);
    return it == masses_.end() ? 0.0 : it->second;
  }

  double empty_mass() const { return mass(SubsetMask::empty_set()); }

  // Bel(A): total mass of stored focal sets contained in A.
  double bel(SubsetMask a) const {
    check_mask(a);
    double sum = 0.0;
    for (const auto& [b, mass] : masses_)
      if (!b.is_empty() && b.is_subset_of(a)) sum += mass;
    return sum;
  }

  // Pl(A): total mass of stored focal sets intersecting A.
  double pl(SubsetMask a) const {
    check_mask(a);
    double sum = 0.0;
    for (const auto& [b, mass] : masses_)
      if (b.intersects(a)) sum += mass;
    return sum;
  }

  // Bel, Pl and d = Pl - Bel for every singleton in one pass.
  SingletonIntervals singleton_intervals() const {
    const std::size_t n = frame_.size();
    SingletonIntervals out{frame_, std::vector<double>(n, 0.0),
                           std::vector<double>(n, 0.0),
                           std::vector<double>(n, 0.0)};
    for (const auto& [a, mass] : masses_) {
      if (a.is_empty()) continue;
      const bool single = a.cardinality() == 1;
      for (std::size_t i = 0; i < n; ++i) {
        if (!a.contains(i)) continue;
        out.pl[i] += mass;
        if (single) out.bel[i] += mass;
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      out.diff[i] = out.pl[i] - out.bel[i];
    return out;
  }

  bool operator==(const MassFunction& other) const {
    return frame_ == other.frame_ && masses_ == other.masses_;
  }

 private:
  void check_mask(SubsetMask a) const {
    if (!frame_.contains_mask(a))
      throw ValidationError("subset mask uses bits beyond the frame");
  }

  Frame frame_;
  FocalMap masses_;
};

// Convenience builder from label-set entries, e.g. {{"a","b"}, 0.1}.
inline MassFunction build_mass_function(
    const Frame& frame,
    const std::vector<std::pair<std::vector<std::string>, double>>& entries,
    bool strict = false, double mass_tolerance = kDefaultMassTolerance) {
  std::vector<std::pair<SubsetMask, double>> resolved;
  resolved.reserve(entries.size());
  for (const auto& [labels, mass] : entries)
    resolved.emplace_back(frame.mask_of(labels), mass);
  return MassFunction(frame, resolved, strict, mass_tolerance);
}

// m(Omega) = 1: total ignorance.
inline MassFunction vacuous(const Frame& frame) {
  return MassFunction(frame, {{frame.full_mask(), 1.0}});
}

}  // namespace mulp
