#pragma once

// Loop invariants.  Region Delta_i (0 <= i <= n-1) is the strip between the
// vertical arcs beta_i and beta_{i+1}; it contains puncture i + 1, and its
// b-entry is b_i (with b_0, b_{n-1} from ExtendedCoords).  Delta_{i,j} is the
// union of Delta_i..Delta_j.
//
// A right loop R_{i,j} is a component of c cut along Delta_{i,j} with both
// ends on beta_i that winds around all of punctures i+1..j+1; a left loop
// L_{i,j} has both ends on beta_{j+1} and winds around the same punctures
// from the other side.  For i == j these are the ordinary loops of Delta_i.

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "pdisk/disk.hpp"
#include "pdisk/dynnikov.hpp"

namespace pdisk {

struct LoopSymbol {
  enum class Kind { left, right };

  Kind kind = Kind::left;
  int i = 0;
  int j = 0;

  LoopSymbol mirror() const {
    return {kind == Kind::left ? Kind::right : Kind::left, i, j};
  }

  // Printing order: by region pair, then L before R.
  auto operator<=>(const LoopSymbol& o) const {
    if (auto c = i <=> o.i; c != 0) return c;
    if (auto c = j <=> o.j; c != 0) return c;
    return kind <=> o.kind;
  }
  bool operator==(const LoopSymbol&) const = default;
};

LoopSymbol left_loop(int i, int j);
LoopSymbol right_loop(int i, int j);

/// "L_{0,1}" / "R_{2,2}"
std::string to_string(const LoopSymbol& s);

/// Parses "L_{0,1}", "L01" or "L0,1".
LoopSymbol parse_loop_symbol(const std::string& text);

/// Nonvanishing loops of one curve with their multiplicities.
class LoopSet {
 public:
  LoopSet() = default;

  void add(const LoopSymbol& s, Count count);
  bool contains(const LoopSymbol& s) const { return counts_.contains(s); }
  Count count(const LoopSymbol& s) const;
  std::vector<LoopSymbol> symbols() const;
  std::size_t size() const { return counts_.size(); }
  bool empty() const { return counts_.empty(); }

  const std::map<LoopSymbol, Count>& counts() const { return counts_; }

  bool operator==(const LoopSet&) const = default;

 private:
  std::map<LoopSymbol, Count> counts_;
};

/// "{L_{0,1}, R_{2,2}}"
std::string to_string(const std::vector<LoopSymbol>& symbols);
std::string to_string(const LoopSet& set);

struct LoopCounts {
  Count right = 0;
  Count left = 0;

  bool operator==(const LoopCounts&) const = default;
};

enum class LoopSide { left, right, none };

std::string to_string(LoopSide side);

/// Sign test on the region's b-entry.
LoopSide loop_sign(const ExtendedCoords& ext, int region);
LoopSide loop_sign(const MultiCurve& curve, int region);

/// Values A_k, B_k (k = 1..n) and their range minima.
class ClosedFormTableau {
 public:
  static constexpr Count kInfinity = Count{1} << 60;

  ClosedFormTableau(const ExtendedCoords& ext, const IntersectionVector& v);

  int punctures() const noexcept { return n_; }
  Count a_value(int k) const { return a_.at(static_cast<std::size_t>(k)); }
  Count b_value(int k) const { return b_.at(static_cast<std::size_t>(k)); }
  /// Minimum over l <= k <= m; kInfinity when the range is empty.
  Count a_min(int l, int m) const;
  Count b_min(int l, int m) const;

 private:
  int n_;
  std::vector<Count> a_;
  std::vector<Count> b_;
};

/// Where the vertical arcs cut each diameter segment: anywhere between the
/// smaller and larger left-going count is a minimal position.  Loop counts
/// do not depend on the choice.
enum class CutPlacement { leftmost, rightmost };

/// Counts loops by cutting the explicit diagram along beta_i and beta_{j+1}.
LoopCounts loops_oracle(const MultiCurve& curve, int i, int j,
                        CutPlacement placement = CutPlacement::leftmost);

/// Closed-form loop counts from coordinates and intersection numbers.
LoopCounts loops_closed_form(const ExtendedCoords& ext, const IntersectionVector& v,
                             int i, int j);

/// List(c) via the geometric oracle.
LoopSet list_of(const MultiCurve& curve);

/// List(c) via the closed form; equal to list_of on every curve.
LoopSet list_from_coords(const DynnikovCoords& coords);

}  // namespace pdisk
