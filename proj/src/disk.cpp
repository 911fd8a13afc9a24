#include "pdisk/disk.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace pdisk {

PuncturedDisk::PuncturedDisk(int n) : n_(n) {
  if (n < 3) {
    throw CurveError("disk needs at least 3 punctures, got " + std::to_string(n));
  }
}

MultiCurve::MultiCurve(PuncturedDisk disk, std::vector<CuttingSequence> components)
    : disk_(disk), components_(std::move(components)) {
  if (components_.empty()) throw CurveError("empty multicurve");
  for (const auto& seq : components_) {
    if (seq.empty() || seq.size() % 2 != 0) {
      throw CurveError("cutting sequence must have even nonzero length");
    }
    for (int s : seq) {
      if (s < 0 || s > disk_.punctures()) {
        throw CurveError("segment index out of range: " + std::to_string(s));
      }
    }
  }
}

bool MultiCurve::is_tight() const {
  for (const auto& seq : components_) {
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (seq[i] == seq[(i + 1) % seq.size()]) return false;
    }
  }
  return true;
}

std::size_t MultiCurve::complexity() const {
  std::size_t total = 0;
  for (const auto& seq : components_) total += seq.size();
  return total;
}

void validate(const IntersectionVector& v) {
  const auto n = static_cast<std::size_t>(v.n);
  if (v.n < 3 || v.alpha.size() != 2 * n || v.beta.size() != n + 1) {
    throw CurveError("intersection vector has wrong shape");
  }
  for (Count c : v.alpha) {
    if (c < 0) throw CurveError("negative intersection count");
  }
  for (Count c : v.beta) {
    if (c < 0) throw CurveError("negative intersection count");
  }
  if (v.alpha_at(-1) != v.alpha_at(0) || v.alpha_at(2 * v.n - 3) != v.alpha_at(2 * v.n - 2)) {
    throw CurveError("not a multicurve vector: extension arcs disagree");
  }
  if (v.beta.front() != 0 || v.beta.back() != 0) {
    throw CurveError("not a multicurve vector: beta_0 and beta_n must vanish");
  }
  for (int i = 1; i <= v.n - 2; ++i) {
    if ((v.alpha_at(2 * i) - v.alpha_at(2 * i - 1)) % 2 != 0) {
      throw CurveError("not a multicurve vector: alpha parity");
    }
  }
  for (int i = 0; i < v.n; ++i) {
    if ((v.beta[i] - v.beta[i + 1]) % 2 != 0) {
      throw CurveError("not a multicurve vector: beta parity");
    }
  }
}

CuttingSequence reduce_sequence(const CuttingSequence& seq) {
  // Tokens keep their direction so that the result can be re-anchored on a
  // downward crossing after cancellations across the seam.
  std::vector<std::pair<int, bool>> stack;
  stack.reserve(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!stack.empty() && stack.back().first == seq[i]) {
      stack.pop_back();
    } else {
      stack.emplace_back(seq[i], i % 2 == 0);
    }
  }
  std::size_t lo = 0;
  std::size_t hi = stack.size();
  while (hi - lo >= 2 && stack[lo].first == stack[hi - 1].first) {
    ++lo;
    --hi;
  }
  CuttingSequence out;
  out.reserve(hi - lo);
  for (std::size_t i = lo; i < hi; ++i) out.push_back(stack[i].first);
  if (!out.empty() && !stack[lo].second) {
    std::rotate(out.begin(), out.begin() + 1, out.end());
  }
  return out;
}

namespace {

// Start (in pairs) of the least rotation of a sequence of crossing pairs.
std::size_t least_pair_rotation(const CuttingSequence& seq) {
  const std::size_t m = seq.size() / 2;
  auto less = [&](std::size_t a, std::size_t b) {
    a %= m;
    b %= m;
    if (seq[2 * a] != seq[2 * b]) return seq[2 * a] < seq[2 * b] ? -1 : 1;
    if (seq[2 * a + 1] != seq[2 * b + 1]) return seq[2 * a + 1] < seq[2 * b + 1] ? -1 : 1;
    return 0;
  };
  std::size_t i = 0;
  std::size_t j = 1;
  std::size_t k = 0;
  while (i < m && j < m && k < m) {
    const int c = less(i + k, j + k);
    if (c == 0) {
      ++k;
      continue;
    }
    if (c > 0) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

CuttingSequence rotated(const CuttingSequence& seq, std::size_t pairs) {
  CuttingSequence out(seq.size());
  const std::size_t shift = 2 * pairs;
  for (std::size_t i = 0; i < seq.size(); ++i) out[i] = seq[(i + shift) % seq.size()];
  return out;
}

}  // namespace

CuttingSequence canonical_sequence(const CuttingSequence& seq) {
  const CuttingSequence reversed(seq.rbegin(), seq.rend());
  CuttingSequence a = rotated(seq, least_pair_rotation(seq));
  CuttingSequence b = rotated(reversed, least_pair_rotation(reversed));
  return std::min(a, b);
}

namespace {

bool component_less(const CuttingSequence& a, const CuttingSequence& b) {
  const int ma = *std::min_element(a.begin(), a.end());
  const int mb = *std::min_element(b.begin(), b.end());
  if (ma != mb) return ma < mb;
  return a < b;
}

std::vector<CuttingSequence> canonical_components(std::vector<CuttingSequence> comps) {
  for (auto& c : comps) c = canonical_sequence(c);
  std::sort(comps.begin(), comps.end(), component_less);
  return comps;
}

}  // namespace

MultiCurve make_relaxed(const PuncturedDisk& disk, int i, int j) {
  const int n = disk.punctures();
  if (i < 1 || j > n || i >= j) {
    throw CurveError("index out of range: relaxed curve needs 1 <= i < j <= n");
  }
  if (i == 1 && j == n) {
    throw CurveError("non-essential curve: c_{1,n} is boundary parallel");
  }
  return MultiCurve(disk, {CuttingSequence{i - 1, j}});
}

MultiCurve tighten(const MultiCurve& curve) {
  std::vector<CuttingSequence> comps;
  for (const auto& seq : curve.sequences()) {
    auto reduced = reduce_sequence(seq);
    if (!reduced.empty()) comps.push_back(std::move(reduced));
  }
  if (comps.empty()) throw CurveError("empty multicurve");
  return MultiCurve(curve.disk(), canonical_components(std::move(comps)));
}

DiagramCounts diagram_counts(const MultiCurve& curve) {
  const int n = curve.punctures();
  DiagramCounts counts;
  counts.points.assign(static_cast<std::size_t>(n + 1), 0);
  // Difference arrays over puncture indices.
  std::vector<Count> up(static_cast<std::size_t>(n + 3), 0);
  std::vector<Count> down(static_cast<std::size_t>(n + 3), 0);
  for (const auto& seq : curve.sequences()) {
    const std::size_t len = seq.size();
    for (std::size_t idx = 0; idx < len; ++idx) {
      ++counts.points[static_cast<std::size_t>(seq[idx])];
      const int s = seq[idx];
      const int t = seq[(idx + 1) % len];
      if (s == t) continue;
      auto& diff = (idx % 2 == 0) ? down : up;
      ++diff[static_cast<std::size_t>(std::min(s, t) + 1)];
      --diff[static_cast<std::size_t>(std::max(s, t) + 1)];
    }
  }
  counts.above.assign(static_cast<std::size_t>(n + 2), 0);
  counts.below.assign(static_cast<std::size_t>(n + 2), 0);
  Count run_up = 0;
  Count run_down = 0;
  for (int k = 1; k <= n; ++k) {
    run_up += up[static_cast<std::size_t>(k)];
    run_down += down[static_cast<std::size_t>(k)];
    counts.above[static_cast<std::size_t>(k)] = run_up;
    counts.below[static_cast<std::size_t>(k)] = run_down;
  }
  return counts;
}

namespace {

// Matches one half-disk.  Within a segment the points whose arc goes left
// come first; anything else would create a crossing or a bigon.
void match_half(const DiagramCounts& counts, const std::vector<Count>& spans,
                const Diagram& d, std::vector<std::size_t>& partner) {
  const int n = d.n;
  std::vector<std::size_t> open;
  for (int s = 0; s <= n; ++s) {
    const Count x = counts.points[static_cast<std::size_t>(s)];
    const Count delta = spans[static_cast<std::size_t>(s + 1)] - spans[static_cast<std::size_t>(s)];
    if ((x - delta) % 2 != 0 || x - delta < 0 || x + delta < 0) {
      throw CurveError("inconsistent crossing counts at segment " + std::to_string(s));
    }
    const Count closers = (x - delta) / 2;
    const std::size_t begin = d.first[static_cast<std::size_t>(s)];
    for (Count r = 0; r < x; ++r) {
      const std::size_t p = begin + static_cast<std::size_t>(r);
      if (r < closers) {
        if (open.empty()) throw CurveError("inconsistent crossing counts: unmatched arc");
        partner[p] = open.back();
        partner[open.back()] = p;
        open.pop_back();
      } else {
        open.push_back(p);
      }
    }
    if (static_cast<Count>(open.size()) != spans[static_cast<std::size_t>(s + 1)]) {
      throw CurveError("inconsistent crossing counts over puncture " + std::to_string(s + 1));
    }
  }
  if (!open.empty()) throw CurveError("inconsistent crossing counts: open arcs remain");
}

}  // namespace

Diagram build_diagram(int n, const DiagramCounts& counts) {
  if (counts.points.size() != static_cast<std::size_t>(n + 1) ||
      counts.above.size() != static_cast<std::size_t>(n + 2) ||
      counts.below.size() != static_cast<std::size_t>(n + 2)) {
    throw CurveError("diagram counts have wrong shape");
  }
  Diagram d;
  d.n = n;
  d.first.assign(static_cast<std::size_t>(n + 2), 0);
  for (int s = 0; s <= n; ++s) {
    const Count x = counts.points[static_cast<std::size_t>(s)];
    if (x < 0) throw CurveError("negative crossing count");
    d.first[static_cast<std::size_t>(s + 1)] = d.first[static_cast<std::size_t>(s)] + static_cast<std::size_t>(x);
    for (Count r = 0; r < x; ++r) {
      d.segment.push_back(s);
      d.position.push_back(r);
    }
  }
  d.upper.assign(d.size(), 0);
  d.lower.assign(d.size(), 0);
  match_half(counts, counts.above, d, d.upper);
  match_half(counts, counts.below, d, d.lower);
  return d;
}

std::vector<CuttingSequence> trace_components(const Diagram& d) {
  std::vector<bool> seen(d.size(), false);
  std::vector<CuttingSequence> comps;
  for (std::size_t start = 0; start < d.size(); ++start) {
    if (seen[start]) continue;
    CuttingSequence seq;
    std::size_t cur = start;
    do {
      seen[cur] = true;
      seq.push_back(d.segment[cur]);
      const std::size_t next = d.lower[cur];
      seen[next] = true;
      seq.push_back(d.segment[next]);
      cur = d.upper[next];
    } while (cur != start);
    comps.push_back(std::move(seq));
  }
  return canonical_components(std::move(comps));
}

int enclosed_punctures(const MultiCurve& curve) {
  if (curve.component_count() != 1) {
    throw CurveError("enclosed_punctures expects a single component");
  }
  const auto& seq = curve.sequences().front();
  int enclosed = 0;
  for (int k = 1; k <= curve.punctures(); ++k) {
    const auto right = std::count_if(seq.begin(), seq.end(), [k](int s) { return s >= k; });
    if (right % 2 == 1) ++enclosed;
  }
  return enclosed;
}

bool is_essential(const MultiCurve& curve) {
  const int inside = enclosed_punctures(curve);
  return inside >= 2 && inside <= curve.punctures() - 1;
}

MultiCurve make_multicurve(const PuncturedDisk& disk, std::vector<CuttingSequence> comps) {
  MultiCurve curve = tighten(MultiCurve(disk, std::move(comps)));
  std::vector<CuttingSequence> traced;
  try {
    traced = trace_components(build_diagram(disk.punctures(), diagram_counts(curve)));
  } catch (const CurveError&) {
    throw CurveError("components are not simple and pairwise disjoint");
  }
  if (traced != curve.sequences()) {
    throw CurveError("components are not simple and pairwise disjoint");
  }
  for (const auto& part : components(curve)) {
    if (!is_essential(part)) throw CurveError("non-essential curve");
  }
  return curve;
}

std::vector<MultiCurve> components(const MultiCurve& curve) {
  std::vector<MultiCurve> out;
  out.reserve(curve.component_count());
  for (const auto& seq : curve.sequences()) out.emplace_back(curve.disk(), std::vector<CuttingSequence>{seq});
  return out;
}

MultiCurve disjoint_union(const MultiCurve& a, const MultiCurve& b) {
  if (!(a.disk() == b.disk())) throw CurveError("curves live on different disks");
  auto comps = a.sequences();
  comps.insert(comps.end(), b.sequences().begin(), b.sequences().end());
  return make_multicurve(a.disk(), std::move(comps));
}

IntersectionVector arc_crossings(const MultiCurve& curve) {
  if (!curve.is_tight()) {
    throw std::logic_error("contract violation: arc_crossings needs a tightened curve");
  }
  const int n = curve.punctures();
  const DiagramCounts c = diagram_counts(curve);
  IntersectionVector v;
  v.n = n;
  v.alpha.assign(static_cast<std::size_t>(2 * n), 0);
  v.beta.assign(static_cast<std::size_t>(n + 1), 0);
  for (int k = 1; k <= n; ++k) {
    v.alpha[static_cast<std::size_t>(2 * k - 2)] = c.above[static_cast<std::size_t>(k)];
    v.alpha[static_cast<std::size_t>(2 * k - 1)] = c.below[static_cast<std::size_t>(k)];
  }
  for (int i = 1; i <= n - 1; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    const Count x = c.points[ui];
    const Count up_left = (x - (c.above[ui + 1] - c.above[ui])) / 2;
    const Count down_left = (x - (c.below[ui + 1] - c.below[ui])) / 2;
    v.beta[ui] = c.above[ui] + c.below[ui] - 2 * std::min(up_left, down_left);
  }
  return v;
}

std::string to_string(const IntersectionVector& v) {
  std::ostringstream os;
  os << "alpha=(";
  for (std::size_t i = 0; i < v.alpha.size(); ++i) os << (i ? "," : "") << v.alpha[i];
  os << ") beta=(";
  for (std::size_t i = 0; i < v.beta.size(); ++i) os << (i ? "," : "") << v.beta[i];
  os << ")";
  return os.str();
}

}  // namespace pdisk
