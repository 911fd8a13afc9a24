#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pdisk/braid.hpp"
#include "pdisk/disk.hpp"

namespace pdisk {

/// ι(c_{i,j}, d) for a tight multicurve d.  Both curves are put in minimal
/// position with the diameter; the relaxed curve then crosses one upper and
/// one lower arc of d exactly when the arc separates its two diameter points.
Count intersection_with_relaxed(const MultiCurve& d, int i, int j);

/// ι(c, d), given an untangling of c.
Count intersection_via(const Untangling& c, const MultiCurve& d);

/// Geometric intersection number of two essential simple closed curves.
Count geometric_intersection(const MultiCurve& c1, const MultiCurve& c2);

struct RegionPair {
  int i = 0;
  int j = 0;

  auto operator<=>(const RegionPair&) const = default;
};

/// Smallest region pair where one curve has a left loop and the other a
/// right loop.
std::optional<RegionPair> are_opposite(const MultiCurve& c1, const MultiCurve& c2);

class CurveFamily {
 public:
  CurveFamily(PuncturedDisk disk, std::vector<std::string> labels, std::vector<MultiCurve> curves);

  const PuncturedDisk& disk() const noexcept { return disk_; }
  std::size_t size() const noexcept { return curves_.size(); }
  const MultiCurve& curve(std::size_t k) const { return curves_.at(k); }
  const std::string& label(std::size_t k) const { return labels_.at(k); }
  const std::vector<MultiCurve>& curves() const noexcept { return curves_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Throws std::out_of_range for an unknown label.
  std::size_t index_of(const std::string& label) const;

 private:
  PuncturedDisk disk_;
  std::vector<std::string> labels_;
  std::vector<MultiCurve> curves_;
};

/// Pairwise intersection numbers, computed once.
class IntersectionTable {
 public:
  explicit IntersectionTable(const CurveFamily& family);

  Count at(std::size_t a, std::size_t b) const { return table_.at(a * k_ + b); }
  std::size_t size() const noexcept { return k_; }

 private:
  std::size_t k_;
  std::vector<Count> table_;
};

enum class FamilyKind { maximal_opposite, opposite, not_opposite };

std::string to_string(FamilyKind kind);

struct FamilyClassification {
  FamilyKind kind = FamilyKind::not_opposite;
  /// First pair (in input order) that intersects without being opposite.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

FamilyClassification classify_family(const CurveFamily& family);
FamilyClassification classify_family(const CurveFamily& family, const IntersectionTable& iota);

}  // namespace pdisk
