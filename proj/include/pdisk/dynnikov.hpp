#pragma once

#include <string>
#include <vector>

#include "pdisk/disk.hpp"

namespace pdisk {

/// Dynnikov coordinates (a_1..a_{n-2}; b_1..b_{n-2}) of a multicurve.
struct DynnikovCoords {
  int n = 0;
  std::vector<Count> a;
  std::vector<Count> b;

  /// From the flat layout [a_1..a_{n-2}, b_1..b_{n-2}] used in family files.
  static DynnikovCoords from_flat(int n, const std::vector<Count>& flat);
  std::vector<Count> flat() const;
  bool is_zero() const;

  bool operator==(const DynnikovCoords&) const = default;
};

/// Coordinates plus the boundary entries a_0 = a_{n-1} = 0,
/// b_0 = -beta_1 / 2 and b_{n-1} = beta_{n-1} / 2.
struct ExtendedCoords {
  DynnikovCoords base;
  Count a0 = 0;
  Count a_last = 0;
  Count b0 = 0;
  Count b_last = 0;

  /// b-entry attached to region Delta_i, 0 <= i <= n - 1.
  Count b_region(int i) const;
};

DynnikovCoords operator+(const DynnikovCoords& x, const DynnikovCoords& y);

DynnikovCoords coords_from_crossings(const IntersectionVector& v);

DynnikovCoords coords_of(const MultiCurve& curve);

ExtendedCoords extend(const DynnikovCoords& coords, const IntersectionVector& v);

/// Intersection numbers of the multicurve with the given coordinates.
/// beta_1 is the least value for which every strip is realizable; any
/// larger value would add boundary-parallel components.
IntersectionVector crossings_from_coords(const DynnikovCoords& coords);

/// Canonical tight multicurve with the given coordinates.
MultiCurve curve_from_coords(const DynnikovCoords& coords);

/// Largest total diameter crossing count curve_from_coords will build.
inline constexpr Count kMaxDiagramPoints = 20'000'000;

/// "(a_1,...,a_{n-2};b_1,...,b_{n-2})"
std::string to_string(const DynnikovCoords& coords);

}  // namespace pdisk
