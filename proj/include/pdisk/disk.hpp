#pragma once

// Combinatorial model of multicurves on the n-punctured disk D_n.
//
// The punctures 1..n sit on the horizontal diameter, which they cut into
// segments 0..n (segment s lies between puncture s and puncture s+1;
// segment 0 touches the boundary on the left, segment n on the right).
// A curve in minimal position with the diameter is recorded by the cyclic
// sequence of segments it crosses.  Entries at even positions are crossings
// from the upper half-disk into the lower one, entries at odd positions
// cross back up; consecutive entries are joined by an arc in one half-disk.
// Since both half-disks are simply connected, the reduced cyclic sequence
// is a complete invariant of the free homotopy class, hence of the isotopy
// class of a simple closed curve.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pdisk {

using Count = std::int64_t;

/// Raised for inputs that do not describe a valid (multi)curve.
class CurveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PuncturedDisk {
 public:
  explicit PuncturedDisk(int n);

  int punctures() const noexcept { return n_; }
  int segments() const noexcept { return n_ + 1; }

  bool operator==(const PuncturedDisk&) const = default;

 private:
  int n_;
};

/// Cyclic sequence of crossed diameter segments; even length.
using CuttingSequence = std::vector<int>;

/// Crossing counts that determine a tight diagram completely.
///
/// `points[s]` is the number of crossings with segment s, `above[k]` and
/// `below[k]` the number of upper / lower arcs passing over / under
/// puncture k.  `above` and `below` have n + 2 entries with zero sentinels
/// at 0 and n + 1.
struct DiagramCounts {
  std::vector<Count> points;
  std::vector<Count> above;
  std::vector<Count> below;

  bool operator==(const DiagramCounts&) const = default;
};

/// Explicit tight diagram: crossing points ordered left to right along
/// the diameter, with the upper and lower non-crossing matchings.
struct Diagram {
  int n = 0;
  std::vector<int> segment;            // per point
  std::vector<Count> position;         // index within its segment
  std::vector<std::size_t> upper;      // partner through the upper half
  std::vector<std::size_t> lower;      // partner through the lower half
  std::vector<std::size_t> first;      // first point of each segment, size n + 2

  std::size_t size() const noexcept { return segment.size(); }
};

class MultiCurve {
 public:
  /// Structural validation only: segment range, even nonzero lengths,
  /// at least one component.  Bigons with the diameter are allowed here.
  MultiCurve(PuncturedDisk disk, std::vector<CuttingSequence> components);

  const PuncturedDisk& disk() const noexcept { return disk_; }
  int punctures() const noexcept { return disk_.punctures(); }
  const std::vector<CuttingSequence>& sequences() const noexcept {
    return components_;
  }
  std::size_t component_count() const noexcept { return components_.size(); }

  /// True when no component has two consecutive crossings of one segment.
  bool is_tight() const;

  /// Total number of crossings with the diameter.
  std::size_t complexity() const;

  bool operator==(const MultiCurve&) const = default;

 private:
  PuncturedDisk disk_;
  std::vector<CuttingSequence> components_;
};

/// Intersection numbers with the Dynnikov arcs, including the extension
/// arcs alpha_{-1}, alpha_0, alpha_{2n-3}, alpha_{2n-2}, beta_0, beta_n.
struct IntersectionVector {
  int n = 0;
  std::vector<Count> alpha;  // alpha_{-1} .. alpha_{2n-2}, stored at index i + 1
  std::vector<Count> beta;   // beta_0 .. beta_n

  Count alpha_at(int i) const { return alpha.at(static_cast<std::size_t>(i + 1)); }
  /// Crossings of the arc joining puncture k (1..n) to the upper boundary.
  Count above(int k) const { return alpha_at(2 * k - 3); }
  Count below(int k) const { return alpha_at(2 * k - 2); }

  bool operator==(const IntersectionVector&) const = default;
};

/// Checks the parity and boundary invariants; throws CurveError.
void validate(const IntersectionVector& v);

// -- canonical forms and construction ---------------------------------------

/// Rotation/reversal normal form of one tight cyclic sequence.
CuttingSequence canonical_sequence(const CuttingSequence& seq);

/// Cancels consecutive crossings of the same segment (cyclically).
CuttingSequence reduce_sequence(const CuttingSequence& seq);

/// Relaxed curve c_{i,j}: the round curve around punctures i..j.
MultiCurve make_relaxed(const PuncturedDisk& disk, int i, int j);

/// Removes every bigon with the diameter and puts the result in canonical
/// form.  Null-homotopic components disappear; an empty result throws.
MultiCurve tighten(const MultiCurve& curve);

/// Tightens, then checks that the components are simple, pairwise
/// disjoint and essential.  Throws CurveError otherwise.
MultiCurve make_multicurve(const PuncturedDisk& disk,
                           std::vector<CuttingSequence> components);

std::vector<MultiCurve> components(const MultiCurve& curve);

MultiCurve disjoint_union(const MultiCurve& a, const MultiCurve& b);

/// Number of punctures enclosed by a single-component curve.
int enclosed_punctures(const MultiCurve& curve);

bool is_essential(const MultiCurve& curve);

// -- diagrams and counting ---------------------------------------------------

DiagramCounts diagram_counts(const MultiCurve& curve);

/// Rebuilds the unique tight diagram with the given counts.
Diagram build_diagram(int n, const DiagramCounts& counts);

/// Components of a diagram as cyclic sequences in canonical form, sorted.
std::vector<CuttingSequence> trace_components(const Diagram& diagram);

/// Minimal crossings with every alpha and beta arc.  Requires a tight curve.
IntersectionVector arc_crossings(const MultiCurve& curve);

std::string to_string(const IntersectionVector& v);

}  // namespace pdisk
