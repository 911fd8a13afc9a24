// The D_6 family of four pairwise opposite curves, rebuilt by search.

#include <doctest.h>

#include "pdisk/dynnikov.hpp"
#include "pdisk/partition.hpp"

using namespace pdisk;

namespace {

const PuncturedDisk D6(6);

// Target loop lists.  The first two include a small loop that every curve
// with the listed large loop must carry.
const std::vector<std::string> kLists = {
    "{L_{0,0}, L_{0,1}, R_{2,2}, R_{3,4}, R_{4,4}}",
    "{L_{1,1}, R_{2,2}, L_{3,3}, L_{3,4}, R_{4,5}, R_{5,5}}",
    "{L_{2,2}, L_{3,3}, L_{3,4}, R_{4,5}, R_{5,5}}",
    "{L_{2,2}, L_{2,3}, R_{3,4}, R_{4,4}}",
};

const std::vector<std::string> kDecisive = {
    "{R_{2,2}, R_{3,4}}",
    "{R_{2,2}, L_{3,4}}",
    "{L_{2,2}, L_{3,4}}",
    "{L_{2,2}, R_{3,4}}",
};

const std::vector<std::vector<Count>> kChosen = {
    {0, -1, 0, 0, 0, 1, 0, 1},
    {0, -1, -1, -1, -2, 1, -1, 0},
    {0, 0, -1, -1, 0, -1, -1, 0},
    {0, 0, 0, 0, 0, -1, 0, 1},
};

CurveFamily chosen() {
  std::vector<MultiCurve> curves;
  for (const auto& v : kChosen) curves.push_back(curve_from_coords(DynnikovCoords::from_flat(6, v)));
  return CurveFamily(D6, {"c1", "c2", "c3", "c4"}, curves);
}

}  // namespace

TEST_CASE("search over small coordinates finds the chosen family first") {
  std::vector<std::vector<MultiCurve>> candidates(4);
  std::vector<Count> x(8, -2);
  for (;;) {
    const DynnikovCoords c = DynnikovCoords::from_flat(6, x);
    if (!c.is_zero()) {
      const std::string list = to_string(list_from_coords(c));
      for (std::size_t k = 0; k < 4; ++k) {
        if (list != kLists[k]) continue;
        MultiCurve m = curve_from_coords(c);
        if (m.component_count() == 1) candidates[k].push_back(std::move(m));
      }
    }
    std::size_t i = 0;
    while (i < 8 && x[i] == 2) x[i++] = -2;
    if (i == 8) break;
    ++x[i];
  }
  CHECK(candidates[0].size() == 32);
  CHECK(candidates[3].size() == 1);

  std::size_t solutions = 0;
  std::size_t best = 0;
  std::vector<std::vector<Count>> best_coords;
  for (const auto& a : candidates[0]) {
    for (const auto& b : candidates[1]) {
      if (!are_opposite(a, b)) continue;
      for (const auto& c : candidates[2]) {
        if (!are_opposite(a, c) || !are_opposite(b, c)) continue;
        for (const auto& d : candidates[3]) {
          if (!are_opposite(a, d) || !are_opposite(b, d) || !are_opposite(c, d)) continue;
          const CurveFamily f(D6, {"c1", "c2", "c3", "c4"}, {a, b, c, d});
          const auto dec = decisive_sets(family_lists(f), Partition{{{0}, {1}, {2}, {3}}});
          bool match = true;
          for (std::size_t k = 0; k < 4; ++k) match = match && to_string(dec[k].symbols) == kDecisive[k];
          if (!match) continue;
          ++solutions;
          const std::size_t total = a.complexity() + b.complexity() + c.complexity() + d.complexity();
          std::vector<std::vector<Count>> coords;
          for (const MultiCurve* m : {&a, &b, &c, &d}) coords.push_back(coords_of(*m).flat());
          if (best_coords.empty() || total < best || (total == best && coords < best_coords)) {
            best = total;
            best_coords = coords;
          }
        }
      }
    }
  }
  CHECK(solutions == 5120);
  CHECK(best == 22);
  CHECK(best_coords == kChosen);
}

TEST_CASE("lists of the chosen family") {
  const CurveFamily f = chosen();
  const auto lists = family_lists(f);
  for (std::size_t k = 0; k < 4; ++k) CHECK(to_string(lists[k]) == kLists[k]);
  CHECK(to_string(opposite_list(lists[0], lists[1])) == "{R_{3,4}}");
  CHECK(to_string(opposite_list(lists[0], lists[2])) == "{R_{2,2}, R_{3,4}}");
}

TEST_CASE("the chosen family is maximal and splits into singletons") {
  const CurveFamily f = chosen();
  CHECK(classify_family(f).kind == FamilyKind::maximal_opposite);
  const PartitionOutcome out = build_partition(f);
  REQUIRE(out.complete());
  CHECK(out.partition.parts == std::vector<std::vector<std::size_t>>{{0}, {1}, {2}, {3}});
  CHECK(group_structure(out).summary() == "F_4");
  CHECK(group_structure(out).free_of_rank_k);
  const auto dec = decisive_sets(family_lists(f), out.partition);
  for (std::size_t k = 0; k < 4; ++k) CHECK(to_string(dec[k].symbols) == kDecisive[k]);
}

TEST_CASE("ping-pong sets of the chosen family") {
  const CurveFamily f = chosen();
  const Partition p = build_partition(f).partition;
  const auto dec = decisive_sets(family_lists(f), p);
  const MultiCurve& c1 = f.curve(0);
  CHECK(x_membership(c1, 0, p, dec));
  CHECK_FALSE(x_membership(c1, 1, p, dec));
  const MultiCurve moved = Twister(f).twist(c1, 2, 1);
  CHECK(x_membership(moved, 1, p, dec));
  CHECK_FALSE(x_membership(moved, 0, p, dec));
}
