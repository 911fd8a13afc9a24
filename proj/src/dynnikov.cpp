#include "pdisk/dynnikov.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace pdisk {

DynnikovCoords DynnikovCoords::from_flat(int n, const std::vector<Count>& flat) {
  PuncturedDisk disk(n);
  const auto half = static_cast<std::size_t>(disk.punctures() - 2);
  if (flat.size() != 2 * half) {
    throw CurveError("coordinate vector for D_" + std::to_string(n) + " needs " +
                     std::to_string(2 * half) + " entries");
  }
  DynnikovCoords c;
  c.n = n;
  c.a.assign(flat.begin(), flat.begin() + static_cast<std::ptrdiff_t>(half));
  c.b.assign(flat.begin() + static_cast<std::ptrdiff_t>(half), flat.end());
  return c;
}

std::vector<Count> DynnikovCoords::flat() const {
  std::vector<Count> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

bool DynnikovCoords::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](Count x) { return x == 0; }) &&
         std::all_of(b.begin(), b.end(), [](Count x) { return x == 0; });
}

Count ExtendedCoords::b_region(int i) const {
  const int n = base.n;
  if (i < 0 || i > n - 1) throw std::out_of_range("region index out of range");
  if (i == 0) return b0;
  if (i == n - 1) return b_last;
  return base.b[static_cast<std::size_t>(i - 1)];
}

DynnikovCoords operator+(const DynnikovCoords& x, const DynnikovCoords& y) {
  if (x.n != y.n) throw CurveError("coordinates of different disks");
  DynnikovCoords out = x;
  for (std::size_t i = 0; i < out.a.size(); ++i) {
    out.a[i] += y.a[i];
    out.b[i] += y.b[i];
  }
  return out;
}

DynnikovCoords coords_from_crossings(const IntersectionVector& v) {
  validate(v);
  const bool empty = std::all_of(v.alpha.begin(), v.alpha.end(), [](Count c) { return c == 0; }) &&
                     std::all_of(v.beta.begin(), v.beta.end(), [](Count c) { return c == 0; });
  if (empty) throw CurveError("empty multicurve");
  DynnikovCoords c;
  c.n = v.n;
  for (int i = 1; i <= v.n - 2; ++i) {
    c.a.push_back((v.alpha_at(2 * i) - v.alpha_at(2 * i - 1)) / 2);
    c.b.push_back((v.beta[static_cast<std::size_t>(i)] - v.beta[static_cast<std::size_t>(i + 1)]) / 2);
  }
  return c;
}

DynnikovCoords coords_of(const MultiCurve& curve) {
  return coords_from_crossings(arc_crossings(tighten(curve)));
}

ExtendedCoords extend(const DynnikovCoords& coords, const IntersectionVector& v) {
  if (coords_from_crossings(v) != coords) {
    throw std::logic_error("contract violation: coordinates do not match the crossing vector");
  }
  ExtendedCoords ext;
  ext.base = coords;
  ext.b0 = -v.beta[1] / 2;
  ext.b_last = v.beta[static_cast<std::size_t>(v.n - 1)] / 2;
  return ext;
}

IntersectionVector crossings_from_coords(const DynnikovCoords& coords) {
  const int n = coords.n;
  PuncturedDisk disk(n);
  const auto m = static_cast<std::size_t>(n - 2);
  if (coords.a.size() != m || coords.b.size() != m) {
    throw CurveError("coordinate vector has wrong length");
  }
  if (coords.is_zero()) throw CurveError("empty multicurve");
  constexpr Count kLimit = std::numeric_limits<Count>::max() / 8;
  for (std::size_t i = 0; i < m; ++i) {
    if (std::abs(coords.a[i]) > kLimit / 4 || std::abs(coords.b[i]) > kLimit / 4) {
      throw CurveError("coordinate entry too large");
    }
  }

  // Strip i (around puncture i + 1) holds |b_i| loops and through arcs;
  // beta_i must leave room for 2|a_i| through arcs plus the right loops.
  Count prefix = 0;  // sum of b_1..b_{i-1}
  Count beta1 = 0;
  for (std::size_t i = 0; i < m; ++i) {
    beta1 = std::max(beta1, 2 * std::abs(coords.a[i]) + 2 * std::max<Count>(coords.b[i], 0) + 2 * prefix);
    prefix += coords.b[i];
    if (std::abs(prefix) > kLimit) throw CurveError("coordinate entries too large");
  }

  IntersectionVector v;
  v.n = n;
  v.beta.assign(static_cast<std::size_t>(n + 1), 0);
  v.alpha.assign(static_cast<std::size_t>(2 * n), 0);
  prefix = 0;
  for (int i = 1; i <= n - 1; ++i) {
    v.beta[static_cast<std::size_t>(i)] = beta1 - 2 * prefix;
    if (i <= n - 2) prefix += coords.b[static_cast<std::size_t>(i - 1)];
  }
  auto set_alpha = [&](int k, Count up, Count down) {
    v.alpha[static_cast<std::size_t>(2 * k - 2)] = up;
    v.alpha[static_cast<std::size_t>(2 * k - 1)] = down;
  };
  set_alpha(1, beta1 / 2, beta1 / 2);
  for (int i = 1; i <= n - 2; ++i) {
    const Count a = coords.a[static_cast<std::size_t>(i - 1)];
    const Count b = coords.b[static_cast<std::size_t>(i - 1)];
    const Count through = v.beta[static_cast<std::size_t>(i)] - 2 * std::max<Count>(b, 0);
    const Count up = through / 2 - a;
    const Count down = through / 2 + a;
    set_alpha(i + 1, up + std::abs(b), down + std::abs(b));
  }
  const Count last = v.beta[static_cast<std::size_t>(n - 1)] / 2;
  set_alpha(n, last, last);
  validate(v);
  return v;
}

MultiCurve curve_from_coords(const DynnikovCoords& coords) {
  const IntersectionVector v = crossings_from_coords(coords);
  const int n = coords.n;
  DiagramCounts counts;
  counts.above.assign(static_cast<std::size_t>(n + 2), 0);
  counts.below.assign(static_cast<std::size_t>(n + 2), 0);
  for (int k = 1; k <= n; ++k) {
    counts.above[static_cast<std::size_t>(k)] = v.above(k);
    counts.below[static_cast<std::size_t>(k)] = v.below(k);
  }
  // Per segment: beta_i = above_i + below_i - 2 min(left-going upper,
  // left-going lower), and the two left-going counts differ by a fixed
  // amount determined by the alpha jumps.
  counts.points.assign(static_cast<std::size_t>(n + 1), 0);
  counts.points[0] = v.above(1);
  counts.points[static_cast<std::size_t>(n)] = v.above(n);
  Count total = counts.points[0] + counts.points[static_cast<std::size_t>(n)];
  for (int i = 1; i <= n - 1; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    const Count jump_up = counts.above[ui + 1] - counts.above[ui];
    const Count jump_down = counts.below[ui + 1] - counts.below[ui];
    const Count min_left2 = counts.above[ui] + counts.below[ui] - v.beta[ui];
    const Count diff2 = jump_down - jump_up;  // 2 (upLeft - downLeft)
    if (min_left2 < 0 || min_left2 % 2 != 0 || diff2 % 2 != 0) {
      throw CurveError("not a multicurve: coordinates are not realizable");
    }
    const Count up_left = min_left2 / 2 + std::max<Count>(diff2 / 2, 0);
    counts.points[ui] = 2 * up_left + jump_up;
    if (counts.points[ui] < 0) throw CurveError("not a multicurve: coordinates are not realizable");
    total += counts.points[ui];
  }
  if (total > kMaxDiagramPoints) throw CurveError("coordinates too large to realize explicitly");
  Diagram d = build_diagram(n, counts);
  MultiCurve curve(PuncturedDisk(n), trace_components(d));
  for (const auto& part : components(curve)) {
    if (!is_essential(part)) throw CurveError("not a multicurve: reconstruction has an inessential component");
  }
  return curve;
}

std::string to_string(const DynnikovCoords& coords) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < coords.a.size(); ++i) os << (i ? "," : "") << coords.a[i];
  os << ";";
  for (std::size_t i = 0; i < coords.b.size(); ++i) os << (i ? "," : "") << coords.b[i];
  os << ")";
  return os.str();
}

}  // namespace pdisk
