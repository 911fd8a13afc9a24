#pragma once

// Mapping classes acting on curves through the fundamental group.
//
// With the base point in the lower half-disk, generator k (1..n) is the
// loop that rises through segment k-1, passes over puncture k and comes
// back down through segment k.  A closed curve is a conjugacy class, so
// homeomorphisms act on curves by acting on cyclically reduced words.

#include <vector>

#include "pdisk/disk.hpp"

namespace pdisk {

/// Letters +k / -k for generator k and its inverse.
using FreeWord = std::vector<int>;

FreeWord free_reduce(const FreeWord& word);
FreeWord cyclic_reduce(const FreeWord& word);
FreeWord inverse(const FreeWord& word);

/// Cyclic word of one component.
FreeWord word_of(const CuttingSequence& seq);

/// Reduced cutting sequence of a nontrivial cyclic word.
CuttingSequence sequence_of(const FreeWord& word);

/// Half twist exchanging punctures k and k+1, raised to +1 or -1.
struct HalfTwist {
  int k = 1;
  int sign = 1;

  HalfTwist inverse() const { return {k, -sign}; }
  bool operator==(const HalfTwist&) const = default;
};

/// Applied first to last.
using Braid = std::vector<HalfTwist>;

Braid inverse(const Braid& braid);

MultiCurve apply_braid(const MultiCurve& curve, HalfTwist h);
MultiCurve apply_braid(const MultiCurve& curve, const Braid& braid);

/// Full twist of the punctures i..j, to the given power.  This is the
/// Dehn twist about the relaxed curve c_{i,j}.
MultiCurve full_twist(const MultiCurve& curve, int i, int j, Count power);

/// Braid that carries a curve onto a relaxed curve c_{i,j}.
struct Untangling {
  int i = 0;
  int j = 0;
  Braid moves;
};

/// Greedy descent on the crossing number with the diameter, with a short
/// exhaustive lookahead when no single half twist helps.
Untangling untangle(const MultiCurve& curve);

}  // namespace pdisk
