#include <doctest.h>

#include "corpus.hpp"
#include "pdisk/disk.hpp"
#include "pdisk/dynnikov.hpp"

using namespace pdisk;

namespace {
const PuncturedDisk D5(5);
}

TEST_CASE("relaxed curves cross exactly the enclosed vertical arcs twice") {
  for (int n = 3; n <= 8; ++n) {
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        if (i == 1 && j == n) continue;
        const IntersectionVector v = arc_crossings(make_relaxed(PuncturedDisk(n), i, j));
        for (int k = 0; k <= n; ++k) CHECK(v.beta[k] == (i <= k && k < j ? 2 : 0));
      }
    }
  }
}

TEST_CASE("relaxed curve input checks") {
  CHECK_THROWS_AS(make_relaxed(D5, 1, 5), CurveError);
  CHECK_THROWS_AS(make_relaxed(D5, 3, 3), CurveError);
  CHECK_THROWS_AS(make_relaxed(D5, 0, 2), CurveError);
  CHECK_THROWS_AS(make_relaxed(D5, 4, 6), CurveError);
  CHECK_THROWS_AS(PuncturedDisk(2), CurveError);
}

TEST_CASE("arc crossings of small relaxed curves") {
  const IntersectionVector c13 = arc_crossings(make_relaxed(D5, 1, 3));
  CHECK(c13.alpha == std::vector<Count>{1, 1, 1, 1, 1, 1, 0, 0, 0, 0});
  CHECK(c13.beta == std::vector<Count>{0, 2, 2, 0, 0, 0});
  const IntersectionVector c45 = arc_crossings(make_relaxed(D5, 4, 5));
  CHECK(c45.beta == std::vector<Count>{0, 0, 0, 0, 2, 0});
  CHECK(to_string(c13) == "alpha=(1,1,1,1,1,1,0,0,0,0) beta=(0,2,2,0,0,0)");
}

TEST_CASE("disjoint union adds crossing counts") {
  const MultiCurve a = make_relaxed(D5, 1, 2);
  const MultiCurve b = make_relaxed(D5, 4, 5);
  const IntersectionVector u = arc_crossings(disjoint_union(a, b));
  const IntersectionVector x = arc_crossings(a);
  const IntersectionVector y = arc_crossings(b);
  for (std::size_t k = 0; k < u.alpha.size(); ++k) CHECK(u.alpha[k] == x.alpha[k] + y.alpha[k]);
  for (std::size_t k = 0; k < u.beta.size(); ++k) CHECK(u.beta[k] == x.beta[k] + y.beta[k]);
  CHECK(components(disjoint_union(a, b)).size() == 2);
  CHECK(components(a).size() == 1);
  CHECK_THROWS_AS(disjoint_union(a, make_relaxed(D5, 2, 4)), CurveError);
}

TEST_CASE("tighten removes bigons with the diameter") {
  const MultiCurve c13 = make_relaxed(D5, 1, 3);
  CHECK(tighten(c13) == c13);
  // detour into segment 2 and straight back
  const MultiCurve loose(D5, {{0, 2, 2, 3}});
  CHECK_FALSE(loose.is_tight());
  const MultiCurve tight = tighten(loose);
  CHECK(tight == c13);
  CHECK(tight.complexity() + 2 == loose.complexity());
  CHECK(tighten(tight) == tight);
  // a bigon that encloses nothing at all
  CHECK_THROWS_AS(tighten(MultiCurve(D5, {{2, 2}})), CurveError);
}

TEST_CASE("rotations and reversals share one canonical form") {
  const CuttingSequence s{0, 3, 1, 4};
  const CuttingSequence c = canonical_sequence(s);
  CHECK(canonical_sequence({1, 4, 0, 3}) == c);
  CHECK(canonical_sequence({4, 1, 3, 0}) == c);
  CHECK(canonical_sequence(c) == c);
}

TEST_CASE("essential curves") {
  CHECK(is_essential(make_relaxed(D5, 1, 3)));
  CHECK_FALSE(is_essential(tighten(MultiCurve(D5, {{1, 2}}))));  // around puncture 2
  CHECK_FALSE(is_essential(tighten(MultiCurve(D5, {{0, 5}}))));  // around everything
  CHECK(enclosed_punctures(make_relaxed(D5, 2, 4)) == 3);
  CHECK_THROWS_AS(make_multicurve(D5, {{1, 2}}), CurveError);
  CHECK_THROWS_AS(MultiCurve(D5, {}), CurveError);
  CHECK_THROWS_AS(MultiCurve(D5, {{0, 6}}), CurveError);
  CHECK_THROWS_AS(MultiCurve(D5, {{0, 1, 2}}), CurveError);
}

TEST_CASE("parity invariants and tightness hold on the corpus") {
  std::size_t checked = 0;
  for (const MultiCurve& c : corpus::curves()) {
    CHECK(c.is_tight());
    CHECK(tighten(c) == c);
    CHECK_NOTHROW(validate(arc_crossings(c)));
    ++checked;
  }
  CHECK(checked >= 1000);
}

TEST_CASE("diagram counts rebuild the same curve") {
  for (int n = 4; n <= 6; ++n) {
    for (const MultiCurve& c : corpus::curves(n)) {
      const Diagram d = build_diagram(n, diagram_counts(c));
      CHECK(make_multicurve(c.disk(), trace_components(d)) == c);
    }
  }
}
