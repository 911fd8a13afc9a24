#include "pdisk/intersection.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "pdisk/loops.hpp"

namespace pdisk {

Count intersection_with_relaxed(const MultiCurve& d, int i, int j) {
  const int n = d.punctures();
  if (i < 1 || j > n || i >= j || (i == 1 && j == n)) {
    throw std::out_of_range("relaxed curve indices out of range");
  }
  const MultiCurve tight = tighten(d);
  const Diagram g = build_diagram(n, diagram_counts(tight));
  const std::size_t a_lo = g.first[static_cast<std::size_t>(i - 1)];
  const std::size_t a_hi = g.first[static_cast<std::size_t>(i)];
  const std::size_t b_lo = g.first[static_cast<std::size_t>(j)];
  const std::size_t b_hi = g.first[static_cast<std::size_t>(j + 1)];

  // Points in [a, b) lie inside the round curve; an arc is crossed when
  // exactly one of its ends is inside.
  std::vector<char> inside(g.size(), 0);
  for (std::size_t p = a_lo; p < b_lo; ++p) inside[p] = 1;
  Count crossed = 0;
  for (std::size_t p = 0; p < g.size(); ++p) {
    if (g.upper[p] > p && inside[p] != inside[g.upper[p]]) ++crossed;
    if (g.lower[p] > p && inside[p] != inside[g.lower[p]]) ++crossed;
  }
  auto toggle = [&](std::size_t p) {
    const std::size_t u = g.upper[p];
    const std::size_t l = g.lower[p];
    crossed -= (inside[p] != inside[u]) + (inside[p] != inside[l]);
    inside[p] ^= 1;
    crossed += (inside[p] != inside[u]) + (inside[p] != inside[l]);
  };

  Count best = crossed;
  for (std::size_t a = a_lo;; ++a) {
    for (std::size_t b = b_lo; b < b_hi; ++b) {
      toggle(b);
      best = std::min(best, crossed);
    }
    for (std::size_t b = b_hi; b > b_lo; --b) toggle(b - 1);
    if (a == a_hi) break;
    toggle(a);
    best = std::min(best, crossed);
  }
  return best;
}

Count intersection_via(const Untangling& c, const MultiCurve& d) {
  return intersection_with_relaxed(apply_braid(d, c.moves), c.i, c.j);
}

Count geometric_intersection(const MultiCurve& c1, const MultiCurve& c2) {
  if (!(c1.disk() == c2.disk())) throw CurveError("curves live on different disks");
  const MultiCurve a = tighten(c1);
  const MultiCurve b = tighten(c2);
  if (a == b) return 0;
  if (a.complexity() <= b.complexity()) return intersection_via(untangle(a), b);
  return intersection_via(untangle(b), a);
}

std::optional<RegionPair> are_opposite(const MultiCurve& c1, const MultiCurve& c2) {
  if (!(c1.disk() == c2.disk())) throw CurveError("curves live on different disks");
  const LoopSet s1 = list_from_coords(coords_of(c1));
  const LoopSet s2 = list_from_coords(coords_of(c2));
  const int n = c1.punctures();
  for (int i = 0; i <= n - 1; ++i) {
    for (int j = i; j <= n - 1; ++j) {
      if ((s1.contains(left_loop(i, j)) && s2.contains(right_loop(i, j))) ||
          (s1.contains(right_loop(i, j)) && s2.contains(left_loop(i, j)))) {
        return RegionPair{i, j};
      }
    }
  }
  return std::nullopt;
}

CurveFamily::CurveFamily(PuncturedDisk disk, std::vector<std::string> labels, std::vector<MultiCurve> curves)
    : disk_(disk), labels_(std::move(labels)) {
  if (curves.empty()) throw CurveError("empty family");
  if (labels_.size() != curves.size()) throw CurveError("label count does not match curve count");
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) throw CurveError("duplicate label " + l);
  }
  for (std::size_t k = 0; k < curves.size(); ++k) {
    if (!(curves[k].disk() == disk_)) throw CurveError(labels_[k] + ": curve on a different disk");
    MultiCurve c = tighten(curves[k]);
    if (c.component_count() != 1) throw CurveError(labels_[k] + ": family curves must be connected");
    if (!is_essential(c)) throw CurveError(labels_[k] + ": non-essential curve");
    curves_.push_back(std::move(c));
  }
}

std::size_t CurveFamily::index_of(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw std::out_of_range("unknown label " + label);
  return static_cast<std::size_t>(it - labels_.begin());
}

IntersectionTable::IntersectionTable(const CurveFamily& family)
    : k_(family.size()), table_(k_ * k_, 0) {
  std::vector<Untangling> untangled;
  untangled.reserve(k_);
  for (const auto& c : family.curves()) untangled.push_back(untangle(c));
  for (std::size_t a = 0; a < k_; ++a) {
    for (std::size_t b = a + 1; b < k_; ++b) {
      const Count x = family.curve(a) == family.curve(b) ? 0 : intersection_via(untangled[a], family.curve(b));
      table_[a * k_ + b] = x;
      table_[b * k_ + a] = x;
    }
  }
}

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::maximal_opposite: return "maximal family of opposite curves";
    case FamilyKind::opposite: return "family of opposite curves";
    case FamilyKind::not_opposite: return "not a family of opposite curves";
  }
  return "";
}

FamilyClassification classify_family(const CurveFamily& family, const IntersectionTable& iota) {
  if (family.size() < 2) throw CurveError("a family needs at least two curves");
  FamilyClassification out;
  bool all_opposite = true;
  for (std::size_t a = 0; a < family.size(); ++a) {
    for (std::size_t b = a + 1; b < family.size(); ++b) {
      const bool opposite = are_opposite(family.curve(a), family.curve(b)).has_value();
      all_opposite = all_opposite && opposite;
      if (iota.at(a, b) != 0 && !opposite && !out.witness) out.witness = {a, b};
    }
  }
  if (out.witness) {
    out.kind = FamilyKind::not_opposite;
  } else {
    out.kind = all_opposite ? FamilyKind::maximal_opposite : FamilyKind::opposite;
  }
  return out;
}

FamilyClassification classify_family(const CurveFamily& family) {
  return classify_family(family, IntersectionTable(family));
}

}  // namespace pdisk
