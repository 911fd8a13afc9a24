#include "pdisk/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace pdisk {

FreeWord free_reduce(const FreeWord& word) {
  FreeWord out;
  out.reserve(word.size());
  for (int x : word) {
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

FreeWord cyclic_reduce(const FreeWord& word) {
  FreeWord w = free_reduce(word);
  std::size_t lo = 0;
  std::size_t hi = w.size();
  while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
    ++lo;
    --hi;
  }
  return FreeWord(w.begin() + static_cast<std::ptrdiff_t>(lo), w.begin() + static_cast<std::ptrdiff_t>(hi));
}

FreeWord inverse(const FreeWord& word) {
  FreeWord out(word.rbegin(), word.rend());
  for (int& x : out) x = -x;
  return out;
}

FreeWord word_of(const CuttingSequence& seq) {
  FreeWord w;
  const std::size_t len = seq.size();
  // Odd positions rise into the upper half; the next entry comes back down.
  for (std::size_t idx = 1; idx < len; idx += 2) {
    const int up = seq[idx];
    const int down = seq[(idx + 1) % len];
    if (up < down) {
      for (int k = up + 1; k <= down; ++k) w.push_back(k);
    } else {
      for (int k = up; k > down; --k) w.push_back(-k);
    }
  }
  return cyclic_reduce(w);
}

CuttingSequence sequence_of(const FreeWord& word) {
  const FreeWord w = cyclic_reduce(word);
  if (w.empty()) throw CurveError("null-homotopic curve");
  // Each letter contributes (up, down); rotate so the sequence opens with a
  // downward crossing.
  CuttingSequence seq;
  seq.reserve(2 * w.size());
  for (int x : w) {
    const int k = std::abs(x);
    if (x > 0) {
      seq.push_back(k - 1);
      seq.push_back(k);
    } else {
      seq.push_back(k);
      seq.push_back(k - 1);
    }
  }
  std::rotate(seq.begin(), seq.begin() + 1, seq.end());
  return reduce_sequence(seq);
}

Braid inverse(const Braid& braid) {
  Braid out;
  out.reserve(braid.size());
  for (auto it = braid.rbegin(); it != braid.rend(); ++it) out.push_back(it->inverse());
  return out;
}

namespace {

using Substitution = std::vector<FreeWord>;  // image of generator k at index k

FreeWord substitute(const FreeWord& word, const Substitution& image) {
  FreeWord out;
  for (int x : word) {
    const FreeWord& piece = image[static_cast<std::size_t>(std::abs(x))];
    if (x > 0) {
      out.insert(out.end(), piece.begin(), piece.end());
    } else {
      for (auto it = piece.rbegin(); it != piece.rend(); ++it) out.push_back(-*it);
    }
  }
  return cyclic_reduce(out);
}

Substitution identity(int n) {
  Substitution s(static_cast<std::size_t>(n + 1));
  for (int k = 1; k <= n; ++k) s[static_cast<std::size_t>(k)] = {k};
  return s;
}

MultiCurve act(const MultiCurve& curve, const Substitution& image) {
  std::vector<CuttingSequence> parts;
  parts.reserve(curve.component_count());
  for (const auto& seq : curve.sequences()) {
    parts.push_back(sequence_of(substitute(word_of(seq), image)));
  }
  return tighten(MultiCurve(curve.disk(), std::move(parts)));
}

}  // namespace

MultiCurve apply_braid(const MultiCurve& curve, HalfTwist h) {
  const int n = curve.punctures();
  if (h.k < 1 || h.k >= n || (h.sign != 1 && h.sign != -1)) {
    throw std::out_of_range("half twist out of range");
  }
  Substitution s = identity(n);
  const int k = h.k;
  const auto uk = static_cast<std::size_t>(k);
  if (h.sign > 0) {
    s[uk] = {k, k + 1, -k};
    s[uk + 1] = {k};
  } else {
    s[uk] = {k + 1};
    s[uk + 1] = {-(k + 1), k, k + 1};
  }
  return act(curve, s);
}

MultiCurve apply_braid(const MultiCurve& curve, const Braid& braid) {
  MultiCurve out = curve;
  for (const HalfTwist& h : braid) out = apply_braid(out, h);
  return out;
}

MultiCurve full_twist(const MultiCurve& curve, int i, int j, Count power) {
  const int n = curve.punctures();
  if (i < 1 || j > n || i >= j) throw std::out_of_range("twist indices out of range");
  if (power == 0) return tighten(curve);
  FreeWord loop;
  for (int k = i; k <= j; ++k) loop.push_back(k);
  if (power < 0) loop = inverse(loop);
  FreeWord conj;
  for (Count r = 0; r < std::abs(power); ++r) conj.insert(conj.end(), loop.begin(), loop.end());
  const FreeWord conj_inv = inverse(conj);

  Substitution s = identity(n);
  for (int k = i; k <= j; ++k) {
    FreeWord img = conj;
    img.push_back(k);
    img.insert(img.end(), conj_inv.begin(), conj_inv.end());
    s[static_cast<std::size_t>(k)] = std::move(img);
  }
  return act(curve, s);
}

namespace {

std::vector<HalfTwist> all_moves(int n) {
  std::vector<HalfTwist> moves;
  for (int k = 1; k < n; ++k) {
    moves.push_back({k, 1});
    moves.push_back({k, -1});
  }
  return moves;
}

// Diameter crossings first, then the total span of the arcs, which breaks
// the plateaus where a curve dips under a block of punctures.
using Measure = std::pair<std::size_t, Count>;

Measure measure(const MultiCurve& curve) {
  const CuttingSequence& seq = curve.sequences().front();
  Count span = 0;
  for (std::size_t idx = 0; idx < seq.size(); ++idx) {
    span += std::abs(seq[idx] - seq[(idx + 1) % seq.size()]);
  }
  return {curve.complexity(), span};
}

bool search(const MultiCurve& curve, const Measure& target, int depth, const std::vector<HalfTwist>& moves,
            Braid& path) {
  if (depth == 0) return false;
  for (const HalfTwist& h : moves) {
    if (!path.empty() && path.back() == h.inverse()) continue;
    const MultiCurve next = apply_braid(curve, h);
    path.push_back(h);
    if (measure(next) < target) return true;
    if (search(next, target, depth - 1, moves, path)) return true;
    path.pop_back();
  }
  return false;
}

}  // namespace

Untangling untangle(const MultiCurve& curve) {
  MultiCurve cur = tighten(curve);
  if (cur.component_count() != 1) throw CurveError("untangle needs a single curve");
  if (!is_essential(cur)) throw CurveError("non-essential curve");
  const auto moves = all_moves(cur.punctures());
  Untangling out;
  while (cur.complexity() > 2) {
    Braid step;
    bool found = false;
    Measure best = measure(cur);
    for (const HalfTwist& h : moves) {
      const Measure m = measure(apply_braid(cur, h));
      if (m < best) {
        best = m;
        step.assign(1, h);
        found = true;
      }
    }
    for (int depth = 2; depth <= 3 && !found; ++depth) {
      step.clear();
      found = search(cur, measure(cur), depth, moves, step);
    }
    if (!found) throw std::logic_error("untangle: no reducing braid found");
    cur = apply_braid(cur, step);
    out.moves.insert(out.moves.end(), step.begin(), step.end());
  }
  const CuttingSequence& seq = cur.sequences().front();
  out.i = std::min(seq[0], seq[1]) + 1;
  out.j = std::max(seq[0], seq[1]);
  return out;
}

}  // namespace pdisk
