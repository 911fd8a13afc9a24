// pdisk: analyse families of curves on the punctured disk.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <numeric>

#include "pdisk/dynnikov.hpp"
#include "pdisk/family.hpp"
#include "pdisk/loops.hpp"
#include "pdisk/render.hpp"

using namespace pdisk;
using nlohmann::json;

namespace {

constexpr int kComplete = 0;
constexpr int kInputError = 1;
constexpr int kIncomplete = 2;

struct Options {
  std::string path;
  std::string format = "text";
  std::string out;
  std::string label;
  std::string other;
  std::string word;
  std::size_t samples = 200;
  std::size_t maxlen = 4;
  std::uint64_t seed = AuditSpec{}.seed;
  Count max_power = 5;
};

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw std::runtime_error("cannot write " + o.out);
  f << text;
}

json loops_json(const LoopSet& set) {
  json j = json::object();
  for (const auto& [s, c] : set.counts()) j[to_string(s)] = c;
  return j;
}

int cmd_analyze(const Options& o) {
  const CurveFamily family = resolve(load_family(o.path));
  const Analysis a = analyze(family);
  emit(o, o.format == "json" ? json_report(family, a).dump(2) + "\n" : text_report(family, a));
  return a.complete() ? kComplete : kIncomplete;
}

int cmd_loops(const Options& o) {
  const CurveFamily family = resolve(load_family(o.path));
  const LoopSet set = list_of(family.curve(family.index_of(o.label)));
  emit(o, o.format == "json" ? loops_json(set).dump(2) + "\n" : to_string(set) + "\n");
  return kComplete;
}

int cmd_coords(const Options& o) {
  const CurveFamily family = resolve(load_family(o.path));
  std::vector<std::size_t> which;
  if (o.label.empty()) {
    which.resize(family.size());
    std::iota(which.begin(), which.end(), 0);
  } else {
    which.push_back(family.index_of(o.label));
  }
  std::ostringstream os;
  json j = json::array();
  for (std::size_t k : which) {
    const MultiCurve& c = family.curve(k);
    const DynnikovCoords x = coords_of(c);
    const IntersectionVector v = arc_crossings(c);
    if (o.format == "json") {
      j.push_back({{"label", family.label(k)}, {"coords", x.flat()}, {"alpha", v.alpha}, {"beta", v.beta}});
    } else {
      os << family.label(k) << " " << to_string(x) << " " << to_string(v) << "\n";
    }
  }
  emit(o, o.format == "json" ? j.dump(2) + "\n" : os.str());
  return kComplete;
}

int cmd_twist(const Options& o) {
  const CurveFamily family = resolve(load_family(o.path));
  const TwistWord w = free_reduce(parse_word(o.word));
  const MultiCurve c = apply_word(w, family.curve(family.index_of(o.label)), family);
  const DynnikovCoords x = coords_of(c);
  const LoopSet set = list_of(c);
  if (o.format == "json") {
    emit(o, json{{"word", to_string(w)}, {"seed", o.label}, {"coords", x.flat()}, {"loops", loops_json(set)}}
                    .dump(2) +
                "\n");
  } else {
    emit(o, to_string(w) + " (" + o.label + ") = " + to_string(x) + " List = " + to_string(set) + "\n");
  }
  return kComplete;
}

int cmd_intersect(const Options& o) {
  const CurveFamily family = resolve(load_family(o.path));
  const MultiCurve& a = family.curve(family.index_of(o.label));
  const MultiCurve& b = family.curve(family.index_of(o.other));
  const Count iota = geometric_intersection(a, b);
  const auto region = are_opposite(a, b);
  if (o.format == "json") {
    json j{{"iota", iota}, {"opposite", region.has_value()}};
    if (region) j["region"] = {region->i, region->j};
    emit(o, j.dump(2) + "\n");
  } else {
    std::string line = "iota(" + o.label + "," + o.other + ") = " + std::to_string(iota);
    line += region ? " opposite at (" + std::to_string(region->i) + "," + std::to_string(region->j) + ")"
                   : " not opposite";
    emit(o, line + "\n");
  }
  return kComplete;
}

int cmd_render(const Options& o) {
  const CurveFamily family = resolve(load_family(o.path));
  emit(o, render_svg(family));
  return kComplete;
}

int cmd_audit(const Options& o) {
  const CurveFamily family = resolve(load_family(o.path));
  const Analysis a = analyze(family);
  if (!a.complete()) {
    std::cerr << summary_line(family, a) << "\n";
    return kIncomplete;
  }
  std::vector<Count> powers;
  for (Count p = -o.max_power; p <= o.max_power; ++p) {
    if (p != 0) powers.push_back(p);
  }
  std::size_t pairs = 0;
  std::size_t loop_violations = 0;
  json loop_failures = json::array();
  std::ostringstream os;
  for (std::size_t x = 0; x < family.size(); ++x) {
    for (std::size_t y = 0; y < family.size(); ++y) {
      if (x == y) continue;
      // Every region where x carries a right loop and y a left one.
      for (const LoopSymbol& s : opposite_list(a.lists[x], a.lists[y])) {
        if (s.kind != LoopSymbol::Kind::right) continue;
        const TwistLoopReport r = check_twist_loops(family.curve(x), family.curve(y), {s.i, s.j}, powers);
        ++pairs;
        loop_violations += r.violations.size();
        for (const auto& v : r.violations) {
          loop_failures.push_back({{"c1", family.label(x)}, {"c2", family.label(y)}, {"region", to_string(s)},
                           {"power", v.power}, {"check", v.check}});
          os << "violation: " << family.label(x) << "," << family.label(y) << " at " << to_string(s) << " p=" << v.power
             << " " << v.check << "\n";
        }
      }
    }
  }
  AuditSpec spec;
  spec.samples = o.samples;
  spec.max_length = o.maxlen;
  spec.seed = o.seed;
  const AuditReport audit = ping_pong_audit(family, a.partition->partition, spec);
  const std::size_t total = loop_violations + audit.violations.size();
  if (o.format == "json") {
    json j{{"schema", kReportSchema},
           {"twist_loops", {{"opposite_pairs", pairs}, {"powers", powers}, {"violations", loop_failures}}},
           {"ping_pong", to_json(audit)},
           {"violations", total}};
    emit(o, j.dump(2) + "\n");
  } else {
    os << "twist loops: " << pairs << " opposite pairs, powers -" << o.max_power << ".." << o.max_power << ", "
       << loop_violations << " violations\n";
    os << "ping-pong: " << audit.samples << " samples, " << audit.triples << " triples, " << audit.unplaced
       << " outside every X set, " << audit.violations.size() << " violations\n";
    for (const auto& v : audit.violations) {
      os << "violation: seed " << v.seed_label << " word " << to_string(v.word) << " X" << v.from_part + 1 << " -> X"
         << v.to_part + 1 << " g = " << to_string(v.g) << ": " << v.what << "\n";
    }
    os << (total == 0 ? "ok" : "FAILED") << "\n";
    emit(o, os.str());
  }
  return total == 0 ? kComplete : kIncomplete;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Curves on the punctured disk: coordinates, loops, twists and complete partitions"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", o.out, "Write output to this file");

  auto* analyze = app.add_subcommand("analyze", "Classify the family, build the partition, report the group");
  analyze->add_option("file", o.path, "Family file")->required();

  auto* loops = app.add_subcommand("loops", "Print List(c) for one curve");
  loops->add_option("file", o.path, "Family file")->required();
  loops->add_option("label", o.label, "Curve label")->required();

  auto* coords = app.add_subcommand("coords", "Print coordinates and arc crossings");
  coords->add_option("file", o.path, "Family file")->required();
  coords->add_option("label", o.label, "Curve label (default: all)");

  auto* twist = app.add_subcommand(
      "twist", "Apply a twist word such as \"t1^2 t3^-1\" to a curve; the rightmost letter acts first");
  twist->add_option("file", o.path, "Family file")->required();
  twist->add_option("word", o.word, "Twist word; tK twists about the K-th curve")->required();
  twist->add_option("label", o.label, "Seed curve label")->required();

  auto* intersect = app.add_subcommand("intersect", "Intersection number and opposite region of two curves");
  intersect->add_option("file", o.path, "Family file")->required();
  intersect->add_option("first", o.label, "Curve label")->required();
  intersect->add_option("second", o.other, "Curve label")->required();

  auto* render = app.add_subcommand("render", "Draw the family as SVG");
  render->add_option("file", o.path, "Family file")->required();

  auto* audit = app.add_subcommand("audit", "Check the twist loop property and the ping-pong sets");
  audit->add_option("file", o.path, "Family file")->required();
  audit->add_option("--samples", o.samples, "Sampled curves")->check(CLI::PositiveNumber);
  audit->add_option("--maxlen", o.maxlen, "Longest sampled word");
  audit->add_option("--seed", o.seed, "Sampler seed");
  audit->add_option("--max-power", o.max_power, "Largest |p| for the twist loop check")->check(CLI::PositiveNumber);

  for (auto* sub : {analyze, loops, coords, twist, intersect, render, audit}) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", o.out, "Write output to this file");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*analyze) return cmd_analyze(o);
    if (*loops) return cmd_loops(o);
    if (*coords) return cmd_coords(o);
    if (*twist) return cmd_twist(o);
    if (*intersect) return cmd_intersect(o);
    if (*render) return cmd_render(o);
    if (*audit) return cmd_audit(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
