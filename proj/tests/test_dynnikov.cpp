#include <doctest.h>

#include <map>
#include <set>

#include "corpus.hpp"
#include "pdisk/dynnikov.hpp"

using namespace pdisk;

namespace {

const PuncturedDisk D5(5);

DynnikovCoords v5(std::vector<Count> flat) { return DynnikovCoords::from_flat(5, flat); }

}  // namespace

TEST_CASE("coordinates of small relaxed curves") {
  CHECK(coords_of(make_relaxed(D5, 1, 3)) == v5({0, 0, 0, 0, 1, 0}));
  CHECK(coords_of(make_relaxed(D5, 2, 4)) == v5({0, 0, 0, -1, 0, 1}));
  CHECK(coords_of(make_relaxed(D5, 4, 5)) == v5({0, 0, 0, 0, 0, -1}));
  CHECK(coords_of(make_relaxed(PuncturedDisk(3), 1, 2)) == DynnikovCoords::from_flat(3, {0, 1}));
  CHECK(to_string(v5({0, 0, 0, -1, 0, 1})) == "(0,0,0;-1,0,1)");
}

TEST_CASE("equal upper and lower counts give a = 0") {
  for (const MultiCurve& c : corpus::relaxed(6)) {
    const IntersectionVector v = arc_crossings(c);
    bool balanced = true;
    for (int i = 1; i <= 4; ++i) balanced = balanced && v.alpha_at(2 * i) == v.alpha_at(2 * i - 1);
    if (balanced) {
      for (Count a : coords_from_crossings(v).a) CHECK(a == 0);
    }
  }
}

TEST_CASE("extended coordinates") {
  const MultiCurve c13 = make_relaxed(D5, 1, 3);
  const ExtendedCoords e13 = extend(coords_of(c13), arc_crossings(c13));
  CHECK(e13.b0 == -1);
  CHECK(e13.b_last == 0);
  const MultiCurve c45 = make_relaxed(D5, 4, 5);
  const ExtendedCoords e45 = extend(coords_of(c45), arc_crossings(c45));
  CHECK(e45.b0 == 0);
  CHECK(e45.b_last == 1);
  for (const MultiCurve& c : corpus::curves(5)) {
    const ExtendedCoords e = extend(coords_of(c), arc_crossings(c));
    CHECK(e.a0 == 0);
    CHECK(e.a_last == 0);
  }
}

TEST_CASE("inverse map on small vectors") {
  CHECK(curve_from_coords(v5({0, 0, 0, 0, 1, 0})) == make_relaxed(D5, 1, 3));
  CHECK(curve_from_coords(v5({0, 0, 0, -1, 0, 1})) == make_relaxed(D5, 2, 4));
  CHECK(curve_from_coords(DynnikovCoords::from_flat(3, {0, 1})) == make_relaxed(PuncturedDisk(3), 1, 2));
  CHECK_THROWS_AS(curve_from_coords(v5({0, 0, 0, 0, 0, 0})), CurveError);
  CHECK_THROWS_AS(DynnikovCoords::from_flat(5, {1, 2, 3}), CurveError);
}

TEST_CASE("coordinates are additive over disjoint unions") {
  const MultiCurve a = make_relaxed(D5, 1, 2);
  const MultiCurve b = make_relaxed(D5, 3, 5);
  CHECK(coords_of(disjoint_union(a, b)) == coords_of(a) + coords_of(b));
  CHECK(curve_from_coords(coords_of(a) + coords_of(b)) == disjoint_union(a, b));
}

TEST_CASE("round trip from vectors") {
  for (int n = corpus::kMinPunctures; n <= corpus::kMaxPunctures; ++n) {
    for (const auto& v : corpus::vectors(n, 400, 3, 77 + static_cast<std::uint64_t>(n))) {
      CHECK(coords_of(curve_from_coords(v)) == v);
    }
  }
}

TEST_CASE("round trip from curves and injectivity") {
  std::map<std::vector<Count>, MultiCurve> seen;
  for (const MultiCurve& c : corpus::curves()) {
    const DynnikovCoords x = coords_of(c);
    CHECK(curve_from_coords(x) == c);
    auto key = x.flat();
    key.push_back(x.n);
    const auto [it, fresh] = seen.emplace(key, c);
    if (!fresh) CHECK(it->second == c);
  }
}

TEST_CASE("crossings from coordinates match the curve") {
  for (const MultiCurve& c : corpus::curves(6)) CHECK(crossings_from_coords(coords_of(c)) == arc_crossings(c));
}
