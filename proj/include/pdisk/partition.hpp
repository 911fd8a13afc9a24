#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pdisk/intersection.hpp"
#include "pdisk/loops.hpp"
#include "pdisk/twist.hpp"

namespace pdisk {

/// Parts hold family indices in increasing order.
struct Partition {
  std::vector<std::vector<std::size_t>> parts;

  /// Index of the first part containing the curve; throws if none.
  std::size_t part_of(std::size_t curve) const;
  std::size_t total() const;
};

enum class PartitionFailureKind {
  intersecting_in_part,   // two curves of one part meet
  disjoint_across_parts,  // curves of different parts are disjoint
  overlapping_parts,      // a curve was placed in two parts; witness (curve, later seed)
};

std::string to_string(PartitionFailureKind kind);

struct PartitionFailure {
  PartitionFailureKind kind;
  std::size_t first = 0;
  std::size_t second = 0;
};

struct PartitionOutcome {
  Partition partition;
  std::optional<PartitionFailure> failure;

  bool complete() const { return !failure.has_value(); }
};

/// Greedy construction: each part collects every curve of the family that
/// is disjoint from its seed, the seed being the first curve not yet
/// placed.
PartitionOutcome build_partition(const CurveFamily& family, const IntersectionTable& iota);
PartitionOutcome build_partition(const CurveFamily& family);

/// Checks the three defining conditions of a complete partition directly.
std::optional<PartitionFailure> check_complete(const Partition& partition, const IntersectionTable& iota);

/// Loops of the first curve whose mirror image is a loop of the second.
std::vector<LoopSymbol> opposite_list(const LoopSet& c1, const LoopSet& c2);

/// List(c) of every family curve, in family order.
std::vector<LoopSet> family_lists(const CurveFamily& family);

struct DecisiveSet {
  std::size_t owner = 0;
  std::vector<LoopSymbol> symbols;  // sorted
};

DecisiveSet decisive_set(std::size_t owner, const std::vector<LoopSet>& lists, const Partition& partition);
std::vector<DecisiveSet> decisive_sets(const std::vector<LoopSet>& lists, const Partition& partition);

/// True when Dec(c_r) is contained in the given list for some c_r in the part.
bool x_membership(const LoopSet& list, std::size_t part, const Partition& partition,
                  const std::vector<DecisiveSet>& dec);
bool x_membership(const MultiCurve& c, std::size_t part, const Partition& partition,
                  const std::vector<DecisiveSet>& dec);

struct GroupStructure {
  std::vector<std::size_t> factors;  // ranks, in part order
  bool free_of_rank_k = false;

  /// "Z^2 * Z", "F_4", "Z^3"
  std::string summary() const;
};

/// Throws CurveError for an incomplete partition.
GroupStructure group_structure(const PartitionOutcome& outcome);

struct AuditSpec {
  std::size_t samples = 200;
  std::size_t max_length = 4;
  Count max_exponent = 2;
  std::uint64_t seed = 20240611;
};

struct AuditViolation {
  std::string seed_label;
  TwistWord word;      // produced the sampled curve from the seed
  std::size_t from_part = 0;
  std::size_t to_part = 0;
  TwistWord g;         // word in the generators of to_part
  std::string what;
};

struct AuditReport {
  std::size_t samples = 0;
  std::size_t triples = 0;
  std::size_t unplaced = 0;  // sampled curves that lie in no X_s
  std::vector<AuditViolation> violations;

  bool ok() const { return violations.empty(); }
};

/// Samples reduced words w and generator curves c_r, takes c = w(c_r); for
/// c in X_s and each part i != s, draws a nontrivial g in the subgroup of
/// part i and checks that g(c) lies in X_i.  Also checks that c lies in at
/// most one X_s.
AuditReport ping_pong_audit(const CurveFamily& family, const Partition& partition, const AuditSpec& spec);

}  // namespace pdisk
