#include "pdisk/partition.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "pdisk/dynnikov.hpp"

namespace pdisk {

std::size_t Partition::part_of(std::size_t curve) const {
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (std::find(parts[p].begin(), parts[p].end(), curve) != parts[p].end()) return p;
  }
  throw std::out_of_range("curve is in no part");
}

std::size_t Partition::total() const {
  std::size_t t = 0;
  for (const auto& p : parts) t += p.size();
  return t;
}

std::string to_string(PartitionFailureKind kind) {
  switch (kind) {
    case PartitionFailureKind::intersecting_in_part: return "intersecting curves in one part";
    case PartitionFailureKind::disjoint_across_parts: return "disjoint curves in different parts";
    case PartitionFailureKind::overlapping_parts: return "parts overlap";
  }
  return "";
}

std::optional<PartitionFailure> check_complete(const Partition& partition, const IntersectionTable& iota) {
  const std::size_t k = iota.size();
  for (const auto& part : partition.parts) {
    for (std::size_t x = 0; x < part.size(); ++x) {
      for (std::size_t y = x + 1; y < part.size(); ++y) {
        if (iota.at(part[x], part[y]) != 0) {
          return PartitionFailure{PartitionFailureKind::intersecting_in_part, part[x], part[y]};
        }
      }
    }
  }
  std::vector<int> seen(k, -1);
  for (std::size_t p = 0; p < partition.parts.size(); ++p) {
    for (std::size_t c : partition.parts[p]) {
      if (seen[c] >= 0) {
        return PartitionFailure{PartitionFailureKind::overlapping_parts, c, c};
      }
      seen[c] = static_cast<int>(p);
    }
  }
  if (partition.total() != k || std::count(seen.begin(), seen.end(), -1) != 0) {
    const auto missing = static_cast<std::size_t>(std::find(seen.begin(), seen.end(), -1) - seen.begin());
    return PartitionFailure{PartitionFailureKind::overlapping_parts, missing, missing};
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      if (seen[a] != seen[b] && iota.at(a, b) < 2) {
        return PartitionFailure{PartitionFailureKind::disjoint_across_parts, a, b};
      }
    }
  }
  return std::nullopt;
}

PartitionOutcome build_partition(const CurveFamily& family, const IntersectionTable& iota) {
  const std::size_t k = family.size();
  PartitionOutcome out;
  std::vector<bool> placed(k, false);
  std::vector<std::size_t> seeds;
  for (;;) {
    const auto seed = static_cast<std::size_t>(std::find(placed.begin(), placed.end(), false) - placed.begin());
    if (seed == k) break;
    seeds.push_back(seed);
    std::vector<std::size_t> part;
    for (std::size_t r = 0; r < k; ++r) {
      if (r == seed || iota.at(r, seed) == 0) part.push_back(r);
    }
    for (std::size_t x = 0; x < part.size() && !out.failure; ++x) {
      for (std::size_t y = x + 1; y < part.size(); ++y) {
        if (iota.at(part[x], part[y]) != 0) {
          out.failure = PartitionFailure{PartitionFailureKind::intersecting_in_part, part[x], part[y]};
          break;
        }
      }
    }
    for (std::size_t r : part) placed[r] = true;
    out.partition.parts.push_back(std::move(part));
    if (out.failure) return out;
  }
  if (out.partition.total() != k) {
    // Report a curve placed twice, with the seed of its second part.
    for (std::size_t c = 0; c < k; ++c) {
      std::vector<std::size_t> owners;
      for (std::size_t p = 0; p < out.partition.parts.size(); ++p) {
        const auto& part = out.partition.parts[p];
        if (std::find(part.begin(), part.end(), c) != part.end()) owners.push_back(p);
      }
      if (owners.size() > 1) {
        out.failure = PartitionFailure{PartitionFailureKind::overlapping_parts, c, seeds[owners[1]]};
        return out;
      }
    }
  }
  out.failure = check_complete(out.partition, iota);
  return out;
}

PartitionOutcome build_partition(const CurveFamily& family) {
  return build_partition(family, IntersectionTable(family));
}

std::vector<LoopSymbol> opposite_list(const LoopSet& c1, const LoopSet& c2) {
  std::vector<LoopSymbol> out;
  for (const LoopSymbol& s : c1.symbols()) {
    if (c2.contains(s.mirror())) out.push_back(s);
  }
  return out;
}

std::vector<LoopSet> family_lists(const CurveFamily& family) {
  std::vector<LoopSet> out;
  out.reserve(family.size());
  for (const auto& c : family.curves()) out.push_back(list_of(c));
  return out;
}

DecisiveSet decisive_set(std::size_t owner, const std::vector<LoopSet>& lists, const Partition& partition) {
  const std::size_t home = partition.part_of(owner);
  DecisiveSet d;
  d.owner = owner;
  for (std::size_t other = 0; other < lists.size(); ++other) {
    if (partition.part_of(other) == home) continue;
    for (const LoopSymbol& s : opposite_list(lists.at(owner), lists[other])) d.symbols.push_back(s);
  }
  std::sort(d.symbols.begin(), d.symbols.end());
  d.symbols.erase(std::unique(d.symbols.begin(), d.symbols.end()), d.symbols.end());
  return d;
}

std::vector<DecisiveSet> decisive_sets(const std::vector<LoopSet>& lists, const Partition& partition) {
  std::vector<DecisiveSet> out;
  for (std::size_t c = 0; c < lists.size(); ++c) out.push_back(decisive_set(c, lists, partition));
  return out;
}

bool x_membership(const LoopSet& list, std::size_t part, const Partition& partition,
                  const std::vector<DecisiveSet>& dec) {
  for (std::size_t r : partition.parts.at(part)) {
    const auto& symbols = dec.at(r).symbols;
    if (std::all_of(symbols.begin(), symbols.end(), [&](const LoopSymbol& s) { return list.contains(s); })) {
      return true;
    }
  }
  return false;
}

bool x_membership(const MultiCurve& c, std::size_t part, const Partition& partition,
                  const std::vector<DecisiveSet>& dec) {
  return x_membership(list_from_coords(coords_of(c)), part, partition, dec);
}

std::string GroupStructure::summary() const {
  if (free_of_rank_k) return "F_" + std::to_string(factors.size());
  std::string out;
  for (std::size_t f = 0; f < factors.size(); ++f) {
    if (f) out += " * ";
    out += "Z";
    if (factors[f] != 1) out += "^" + std::to_string(factors[f]);
  }
  return out;
}

GroupStructure group_structure(const PartitionOutcome& outcome) {
  if (!outcome.complete()) throw CurveError("not a complete partition");
  GroupStructure g;
  for (const auto& part : outcome.partition.parts) g.factors.push_back(part.size());
  g.free_of_rank_k =
      g.factors.size() > 1 && std::all_of(g.factors.begin(), g.factors.end(), [](std::size_t f) { return f == 1; });
  return g;
}

namespace {

class WordSampler {
 public:
  explicit WordSampler(std::uint64_t seed) : rng_(seed) {}

  std::size_t index(std::size_t bound) {
    return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng_);
  }

  Count exponent(Count max) {
    const Count e = std::uniform_int_distribution<Count>(1, max)(rng_);
    return index(2) == 0 ? e : -e;
  }

  /// Reduced word of length 0..max_length over generators 1..k.
  TwistWord word(std::size_t k, std::size_t max_length, Count max_exponent) {
    TwistWord w;
    const std::size_t length = index(max_length + 1);
    while (w.letters.size() < length) {
      const int g = static_cast<int>(index(k)) + 1;
      if (!w.letters.empty() && w.letters.back().generator == g) {
        if (k == 1) break;
        continue;
      }
      w.letters.push_back({g, exponent(max_exponent)});
    }
    return w;
  }

  /// Nontrivial element of the free abelian group on the given generators.
  TwistWord abelian(const std::vector<std::size_t>& part, Count max_exponent) {
    TwistWord w;
    for (std::size_t r : part) {
      if (index(2) == 0) w.letters.push_back({static_cast<int>(r) + 1, exponent(max_exponent)});
    }
    if (w.empty()) w.letters.push_back({static_cast<int>(part[index(part.size())]) + 1, exponent(max_exponent)});
    return w;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace

AuditReport ping_pong_audit(const CurveFamily& family, const Partition& partition, const AuditSpec& spec) {
  if (spec.max_exponent < 1) throw std::invalid_argument("audit exponent bound must be positive");
  const IntersectionTable iota(family);
  if (check_complete(partition, iota)) throw CurveError("not a complete partition");
  const Twister twister(family);
  const auto lists = family_lists(family);
  const auto dec = decisive_sets(lists, partition);
  const std::size_t m = partition.parts.size();
  WordSampler sampler(spec.seed);

  AuditReport report;
  for (std::size_t n = 0; n < spec.samples; ++n) {
    const std::size_t seed = sampler.index(family.size());
    const TwistWord w = sampler.word(family.size(), spec.max_length, spec.max_exponent);
    const MultiCurve c = twister.apply_word(w, family.curve(seed));
    const LoopSet list = list_from_coords(coords_of(c));
    ++report.samples;

    std::vector<std::size_t> homes;
    for (std::size_t s = 0; s < m; ++s) {
      if (x_membership(list, s, partition, dec)) homes.push_back(s);
    }
    if (homes.empty()) {
      ++report.unplaced;
      continue;
    }
    if (homes.size() > 1) {
      report.violations.push_back({family.label(seed), w, homes[0], homes[1], {}, "curve lies in two X sets"});
      continue;
    }
    const std::size_t s = homes.front();
    for (std::size_t i = 0; i < m; ++i) {
      if (i == s) continue;
      const TwistWord g = sampler.abelian(partition.parts[i], spec.max_exponent);
      ++report.triples;
      if (!x_membership(twister.apply_word(g, c), i, partition, dec)) {
        report.violations.push_back({family.label(seed), w, s, i, g, "g(c) is not in X_i"});
      }
    }
  }
  return report;
}

}  // namespace pdisk
