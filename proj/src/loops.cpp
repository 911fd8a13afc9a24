#include "pdisk/loops.hpp"

#include <algorithm>
#include <cstdlib>
#include <regex>
#include <sstream>

namespace pdisk {

LoopSymbol left_loop(int i, int j) { return {LoopSymbol::Kind::left, i, j}; }
LoopSymbol right_loop(int i, int j) { return {LoopSymbol::Kind::right, i, j}; }

std::string to_string(const LoopSymbol& s) {
  std::ostringstream os;
  os << (s.kind == LoopSymbol::Kind::left ? 'L' : 'R') << "_{" << s.i << ',' << s.j << '}';
  return os.str();
}

LoopSymbol parse_loop_symbol(const std::string& text) {
  static const std::regex pattern(R"(\s*([LR])_?\{?\s*(\d+)\s*,?\s*(\d+)\s*\}?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) {
    throw std::invalid_argument("bad loop symbol: " + text);
  }
  LoopSymbol s;
  s.kind = m[1] == "L" ? LoopSymbol::Kind::left : LoopSymbol::Kind::right;
  s.i = std::stoi(m[2]);
  s.j = std::stoi(m[3]);
  if (s.i > s.j) throw std::invalid_argument("bad loop symbol: " + text);
  return s;
}

void LoopSet::add(const LoopSymbol& s, Count count) {
  if (count > 0) counts_[s] += count;
}

Count LoopSet::count(const LoopSymbol& s) const {
  auto it = counts_.find(s);
  return it == counts_.end() ? 0 : it->second;
}

std::vector<LoopSymbol> LoopSet::symbols() const {
  std::vector<LoopSymbol> out;
  out.reserve(counts_.size());
  for (const auto& [s, c] : counts_) out.push_back(s);
  return out;
}

std::string to_string(const std::vector<LoopSymbol>& symbols) {
  auto sorted = symbols;
  std::sort(sorted.begin(), sorted.end());
  std::string out = "{";
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (k) out += ", ";
    out += to_string(sorted[k]);
  }
  return out + "}";
}

std::string to_string(const LoopSet& set) { return to_string(set.symbols()); }

std::string to_string(LoopSide side) {
  switch (side) {
    case LoopSide::left: return "left";
    case LoopSide::right: return "right";
    case LoopSide::none: return "none";
  }
  return "none";
}

LoopSide loop_sign(const ExtendedCoords& ext, int region) {
  const Count b = ext.b_region(region);
  if (b < 0) return LoopSide::left;
  if (b > 0) return LoopSide::right;
  return LoopSide::none;
}

LoopSide loop_sign(const MultiCurve& curve, int region) {
  const MultiCurve tight = tighten(curve);
  const IntersectionVector v = arc_crossings(tight);
  return loop_sign(extend(coords_from_crossings(v), v), region);
}

ClosedFormTableau::ClosedFormTableau(const ExtendedCoords& ext, const IntersectionVector& v)
    : n_(v.n) {
  a_.assign(static_cast<std::size_t>(n_ + 1), 0);
  b_.assign(static_cast<std::size_t>(n_ + 1), 0);
  for (int k = 1; k <= n_; ++k) {
    const Count shift = std::abs(ext.b_region(k - 1));
    a_[static_cast<std::size_t>(k)] = v.above(k) - shift;
    b_[static_cast<std::size_t>(k)] = v.below(k) - shift;
  }
}

Count ClosedFormTableau::a_min(int l, int m) const {
  if (l > m) return kInfinity;
  return *std::min_element(a_.begin() + l, a_.begin() + m + 1);
}

Count ClosedFormTableau::b_min(int l, int m) const {
  if (l > m) return kInfinity;
  return *std::min_element(b_.begin() + l, b_.begin() + m + 1);
}

namespace {

void check_region_pair(int n, int i, int j) {
  if (i < 0 || j < i || j > n - 1) {
    throw std::out_of_range("region pair (" + std::to_string(i) + "," + std::to_string(j) +
                            ") out of range");
  }
}

struct Event {
  bool wall;
  int index;  // wall index or point index
};

}  // namespace

LoopCounts loops_oracle(const MultiCurve& curve, int i, int j, CutPlacement placement) {
  const int n = curve.punctures();
  check_region_pair(n, i, j);
  if (curve.component_count() != 1 || !curve.is_tight()) {
    throw std::logic_error("contract violation: loops_oracle needs one tight curve");
  }
  const Diagram d = build_diagram(n, diagram_counts(curve));

  std::vector<Count> cut(static_cast<std::size_t>(n + 1), 0);
  for (int w = 1; w <= n - 1; ++w) {
    Count up_left = 0;
    Count down_left = 0;
    for (std::size_t p = d.first[static_cast<std::size_t>(w)]; p < d.first[static_cast<std::size_t>(w + 1)]; ++p) {
      if (d.upper[p] < p) ++up_left;
      if (d.lower[p] < p) ++down_left;
    }
    cut[static_cast<std::size_t>(w)] =
        placement == CutPlacement::leftmost ? std::min(up_left, down_left) : std::max(up_left, down_left);
  }
  auto left_of = [&](std::size_t p, int w) {
    if (w <= 0) return false;
    if (w >= n) return true;
    const int s = d.segment[p];
    return s < w || (s == w && d.position[p] < cut[static_cast<std::size_t>(w)]);
  };

  const int left_wall = i;
  const int right_wall = j + 1;
  std::vector<Event> events;
  auto add_arc = [&](std::size_t p, std::size_t q) {
    const bool rightward = p < q;
    const int walls[2] = {rightward ? left_wall : right_wall, rightward ? right_wall : left_wall};
    for (int w : walls) {
      if (left_of(p, w) != left_of(q, w)) events.push_back({true, w});
    }
  };
  std::size_t cur = 0;
  do {
    events.push_back({false, static_cast<int>(cur)});
    const std::size_t next = d.lower[cur];
    add_arc(cur, next);
    events.push_back({false, static_cast<int>(next)});
    const std::size_t after = d.upper[next];
    add_arc(next, after);
    cur = after;
  } while (cur != 0);

  const auto first_wall = std::find_if(events.begin(), events.end(), [](const Event& e) { return e.wall; });
  if (first_wall == events.end()) return {};
  std::rotate(events.begin(), first_wall, events.end());
  events.push_back(events.front());

  LoopCounts result;
  std::vector<int> piece;
  int start_wall = events.front().index;
  for (std::size_t e = 1; e < events.size(); ++e) {
    if (!events[e].wall) {
      piece.push_back(events[e].index);
      continue;
    }
    const int end_wall = events[e].index;
    if (end_wall == start_wall && !piece.empty()) {
      const auto first = static_cast<std::size_t>(piece.front());
      const bool inside = !left_of(first, left_wall) && left_of(first, right_wall);
      if (inside) {
        bool winds = true;
        for (int k = i + 1; k <= j + 1 && winds; ++k) {
          const auto hits = std::count_if(piece.begin(), piece.end(), [&](int p) {
            const int s = d.segment[static_cast<std::size_t>(p)];
            return start_wall == left_wall ? s >= k : s <= k - 1;
          });
          winds = hits % 2 == 1;
        }
        if (winds) {
          if (start_wall == left_wall) {
            ++result.right;
          } else {
            ++result.left;
          }
        }
      }
    }
    piece.clear();
    start_wall = end_wall;
  }
  return result;
}

LoopCounts loops_closed_form(const ExtendedCoords& ext, const IntersectionVector& v, int i, int j) {
  check_region_pair(v.n, i, j);
  const ClosedFormTableau t(ext, v);
  // Region pair (i, j) spans punctures l..m.
  const int l = i + 1;
  const int m = j + 1;
  LoopCounts out;
  out.right = std::min({t.a_min(l, m - 1) - t.a_min(l, m), t.b_min(l, m - 1) - t.b_min(l, m),
                        std::max<Count>(ext.b_region(j), 0)});
  out.left = std::min({t.a_min(l + 1, m) - t.a_min(l, m), t.b_min(l + 1, m) - t.b_min(l, m),
                       std::max<Count>(-ext.b_region(i), 0)});
  return out;
}

LoopSet list_of(const MultiCurve& curve) {
  const MultiCurve tight = tighten(curve);
  const int n = tight.punctures();
  LoopSet set;
  for (int i = 0; i <= n - 1; ++i) {
    for (int j = i; j <= n - 1; ++j) {
      const LoopCounts c = loops_oracle(tight, i, j);
      set.add(right_loop(i, j), c.right);
      set.add(left_loop(i, j), c.left);
    }
  }
  return set;
}

LoopSet list_from_coords(const DynnikovCoords& coords) {
  const IntersectionVector v = crossings_from_coords(coords);
  const ExtendedCoords ext = extend(coords, v);
  LoopSet set;
  for (int i = 0; i <= coords.n - 1; ++i) {
    for (int j = i; j <= coords.n - 1; ++j) {
      const LoopCounts c = loops_closed_form(ext, v, i, j);
      set.add(right_loop(i, j), c.right);
      set.add(left_loop(i, j), c.left);
    }
  }
  return set;
}

}  // namespace pdisk
