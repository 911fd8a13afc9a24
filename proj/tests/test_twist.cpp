#include <doctest.h>

#include "corpus.hpp"
#include "pdisk/dynnikov.hpp"
#include "pdisk/loops.hpp"
#include "pdisk/twist.hpp"

using namespace pdisk;

namespace {

const PuncturedDisk D5(5);

CurveFamily mixed_d5() {
  return CurveFamily(D5, {"c1", "c2", "c3"},
                     {make_relaxed(D5, 1, 3), make_relaxed(D5, 2, 4), make_relaxed(D5, 4, 5)});
}

}  // namespace

TEST_CASE("word syntax") {
  CHECK(to_string(parse_word("t1^2 t3^-1 t2")) == "t1^2 t3^-1 t2");
  CHECK(parse_word("t_{1}^{2}") == TwistWord{{{1, 2}}});
  CHECK(parse_word("").empty());
  CHECK(to_string(TwistWord{}) == "1");
  CHECK_THROWS(parse_word("t0"));
  CHECK_THROWS(parse_word("s1"));
  CHECK_THROWS(parse_word("t1^"));
}

TEST_CASE("free reduction of twist words") {
  CHECK(free_reduce(parse_word("t1 t2 t2^-1 t3")) == parse_word("t1 t3"));
  CHECK(free_reduce(parse_word("t1 t3^2 t1")) == parse_word("t1 t3^2 t1"));
  CHECK(free_reduce(parse_word("t1 t1^-1")).empty());
  CHECK(free_reduce(parse_word("t2 t2^3 t1^0 t2^-1")) == parse_word("t2^3"));
  CHECK(is_reduced(parse_word("t1 t2^-1")));
  CHECK_FALSE(is_reduced(parse_word("t1 t1")));
  CHECK(inverse(parse_word("t1^2 t3^-1")) == parse_word("t3 t1^-2"));
}

TEST_CASE("twists about a curve") {
  const MultiCurve c13 = make_relaxed(D5, 1, 3);
  const MultiCurve c24 = make_relaxed(D5, 2, 4);
  for (Count p : {-3, -1, 1, 2}) {
    CHECK(dehn_twist(c13, c13, p) == c13);
    CHECK(dehn_twist(dehn_twist(c24, c13, p), c13, -p) == c24);
  }
  CHECK(list_of(dehn_twist(c24, c13, 1)).contains(right_loop(1, 2)));
  CHECK_THROWS(dehn_twist(c24, c13, 0));
  // both crossed vertical arcs pick up four strands per power
  for (Count p = 1; p <= 4; ++p) {
    for (Count s : {p, -p}) {
      const IntersectionVector v = arc_crossings(dehn_twist(c24, c13, s));
      CHECK(v.beta[1] == 4 * p);
      CHECK(v.beta[2] == 4 * p);
      CHECK(v.beta[3] == 2);
    }
  }
}

TEST_CASE("words act right to left") {
  const CurveFamily f = mixed_d5();
  const Twister tw(f);
  const MultiCurve& c2 = f.curve(1);
  CHECK(tw.apply_word(TwistWord{}, f.curve(0)) == f.curve(0));
  CHECK(tw.apply_word(parse_word("t1^2"), c2) == tw.twist(tw.twist(c2, 1, 1), 1, 1));
  CHECK(tw.apply_word(parse_word("t3 t1"), c2) == tw.twist(tw.twist(c2, 1, 1), 3, 1));
  CHECK(apply_word(parse_word("t3 t1"), c2, f) == tw.apply_word(parse_word("t3 t1"), c2));
  CHECK_THROWS_WITH(tw.apply_word(parse_word("t4"), c2), doctest::Contains("unbound generator t4"));
}

TEST_CASE("twisting about a disjoint curve changes nothing") {
  for (int n = 4; n <= 6; ++n) {
    const auto curves = corpus::curves(n);
    for (std::size_t a = 0; a < curves.size(); a += 13) {
      for (std::size_t b = 0; b < curves.size(); b += 5) {
        if (curves[a].complexity() > 12) continue;
        if (geometric_intersection(curves[a], curves[b]) != 0) continue;
        CHECK(coords_of(dehn_twist(curves[b], curves[a], 1)) == coords_of(curves[b]));
      }
    }
  }
}

TEST_CASE("inverse words undo words") {
  for (int n = 4; n <= 7; ++n) {
    const auto base = corpus::relaxed(n);
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < base.size(); ++k) labels.push_back("r" + std::to_string(k + 1));
    const Twister tw(CurveFamily(PuncturedDisk(n), labels, base));
    for (const auto& t : corpus::twisted(n, 60, 9 + static_cast<std::uint64_t>(n))) {
      CHECK(tw.apply_word(inverse(t.word), t.curve) == t.seed);
    }
  }
}

TEST_CASE("twist loop property on small pairs") {
  const std::vector<Count> powers{-3, -2, -1, 0, 1, 2, 3};
  const TwistLoopReport r = check_twist_loops(make_relaxed(D5, 1, 3), make_relaxed(D5, 2, 4), {1, 2}, powers);
  CHECK(r.precondition_met);
  CHECK(r.powers_checked == 6);
  CHECK(r.ok());
  const TwistLoopReport bad = check_twist_loops(make_relaxed(D5, 1, 3), make_relaxed(D5, 4, 5), {1, 2}, powers);
  CHECK_FALSE(bad.precondition_met);
  CHECK_FALSE(bad.ok());
  CHECK(bad.message == "not opposite at region (1,2)");
}
