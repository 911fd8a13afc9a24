#include "pdisk/family.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "pdisk/dynnikov.hpp"

namespace pdisk {

using nlohmann::json;

namespace {

std::string position(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t k = 0; k + 1 < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

CurveSpec parse_entry(const json& e, std::size_t index) {
  const std::string where = "curve " + std::to_string(index + 1);
  if (!e.is_object()) throw FamilyError(where + ": expected an object");
  CurveSpec spec;
  spec.label = "c" + std::to_string(index + 1);
  if (e.contains("label")) {
    if (!e["label"].is_string() || e["label"].get<std::string>().empty()) {
      throw FamilyError(where + ": label must be a nonempty string");
    }
    spec.label = e["label"].get<std::string>();
  }
  const int kinds = static_cast<int>(e.contains("relaxed")) + static_cast<int>(e.contains("coords")) +
                    static_cast<int>(e.contains("word"));
  if (kinds != 1) throw FamilyError(where + ": give exactly one of relaxed, coords, word");
  try {
    if (e.contains("relaxed")) {
      const auto pair = e["relaxed"].get<std::vector<int>>();
      if (pair.size() != 2) throw FamilyError(where + ": relaxed needs two puncture indices");
      spec.kind = CurveSpec::Kind::relaxed;
      spec.relaxed = {pair[0], pair[1]};
    } else if (e.contains("coords")) {
      spec.kind = CurveSpec::Kind::coords;
      spec.coords = e["coords"].get<std::vector<Count>>();
    } else {
      spec.kind = CurveSpec::Kind::word;
      const json& w = e["word"];
      std::string text;
      if (w.is_string()) {
        text = w.get<std::string>();
      } else {
        for (const auto& piece : w.get<std::vector<std::string>>()) text += piece + " ";
      }
      spec.word = parse_word(text);
      if (!e.contains("seed") || !e["seed"].is_string()) throw FamilyError(where + ": word needs a seed label");
      spec.seed = e["seed"].get<std::string>();
    }
  } catch (const json::exception& ex) {
    throw FamilyError(where + ": " + ex.what());
  } catch (const std::invalid_argument& ex) {
    throw FamilyError(where + ": " + ex.what());
  }
  return spec;
}

}  // namespace

FamilyDocument parse_family(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& ex) {
    std::string what = ex.what();
    const auto colon = what.find(": ", what.find("column"));
    if (colon != std::string::npos) what = what.substr(colon + 2);
    throw FamilyError("parse error at " + position(text, ex.byte) + ": " + what);
  }
  if (!doc.is_object()) throw FamilyError("family document must be an object");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) throw FamilyError("missing integer field n");
  if (!doc.contains("curves") || !doc["curves"].is_array()) throw FamilyError("missing array field curves");
  FamilyDocument out;
  out.n = doc["n"].get<int>();
  if (out.n < 3) throw FamilyError("n must be at least 3");
  for (std::size_t k = 0; k < doc["curves"].size(); ++k) out.entries.push_back(parse_entry(doc["curves"][k], k));
  if (out.entries.empty()) throw FamilyError("empty family");
  return out;
}

FamilyDocument load_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FamilyError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_family(buf.str());
}

CurveFamily resolve(const FamilyDocument& doc) {
  const PuncturedDisk disk(doc.n);
  std::vector<std::string> labels;
  std::vector<MultiCurve> curves;
  for (const CurveSpec& spec : doc.entries) {
    const std::string& where = spec.label;
    try {
      switch (spec.kind) {
        case CurveSpec::Kind::relaxed:
          curves.push_back(make_relaxed(disk, spec.relaxed.first, spec.relaxed.second));
          break;
        case CurveSpec::Kind::coords:
          curves.push_back(curve_from_coords(DynnikovCoords::from_flat(doc.n, spec.coords)));
          break;
        case CurveSpec::Kind::word: {
          const auto seed = std::find(labels.begin(), labels.end(), spec.seed);
          if (seed == labels.end()) throw FamilyError("unknown seed " + spec.seed);
          for (const TwistLetter& l : spec.word.letters) {
            if (static_cast<std::size_t>(l.generator) > curves.size()) {
              throw FamilyError("unbound generator t" + std::to_string(l.generator));
            }
          }
          const CurveFamily sofar(disk, labels, curves);
          curves.push_back(apply_word(spec.word, sofar.curve(static_cast<std::size_t>(seed - labels.begin())), sofar));
          break;
        }
      }
    } catch (const FamilyError& ex) {
      throw FamilyError(where + ": " + ex.what());
    } catch (const std::invalid_argument& ex) {
      throw FamilyError(where + ": " + ex.what());
    } catch (const std::out_of_range& ex) {
      throw FamilyError(where + ": " + ex.what());
    }
    labels.push_back(spec.label);
  }
  try {
    return CurveFamily(disk, labels, curves);
  } catch (const CurveError& ex) {
    throw FamilyError(ex.what());
  }
}

Analysis analyze(const CurveFamily& family) {
  Analysis a;
  const IntersectionTable iota(family);
  const std::size_t k = family.size();
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) a.iota.push_back(iota.at(x, y));
  }
  a.lists = family_lists(family);
  a.classification = classify_family(family, iota);
  if (a.classification.kind == FamilyKind::not_opposite) return a;
  a.partition = build_partition(family, iota);
  if (a.partition->complete()) {
    a.group = group_structure(*a.partition);
    a.decisive = decisive_sets(a.lists, a.partition->partition);
  }
  return a;
}

namespace {

std::string label_set(const CurveFamily& family, const std::vector<std::size_t>& part) {
  std::string out = "{";
  for (std::size_t k = 0; k < part.size(); ++k) {
    if (k) out += ",";
    out += family.label(part[k]);
  }
  return out + "}";
}

std::string failure_text(const CurveFamily& family, const PartitionFailure& f) {
  return "doesn't give a complete partition: " + to_string(f.kind) + " (" + family.label(f.first) + ", " +
         family.label(f.second) + ")";
}

}  // namespace

std::string summary_line(const CurveFamily& family, const Analysis& analysis) {
  if (!analysis.partition) {
    const auto [x, y] = *analysis.classification.witness;
    return "not a family of opposite curves: " + family.label(x) + " and " + family.label(y) +
           " intersect without opposite loops";
  }
  std::string out;
  const auto& parts = analysis.partition->partition.parts;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (p) out += " ";
    out += "P" + std::to_string(p + 1) + "=" + label_set(family, parts[p]);
  }
  if (analysis.group) {
    out += " G = " + analysis.group->summary();
  } else {
    out += " " + failure_text(family, *analysis.partition->failure);
  }
  return out;
}

std::string text_report(const CurveFamily& family, const Analysis& analysis) {
  std::ostringstream os;
  os << "family: " << to_string(analysis.classification.kind) << "\n";
  for (std::size_t c = 0; c < family.size(); ++c) {
    os << "  " << family.label(c) << " " << to_string(coords_of(family.curve(c))) << " List = "
       << to_string(analysis.lists[c]) << "\n";
  }
  if (!analysis.decisive.empty()) {
    for (const DecisiveSet& d : analysis.decisive) {
      os << "  Dec(" << family.label(d.owner) << ") = " << to_string(d.symbols) << "\n";
    }
  }
  os << summary_line(family, analysis) << "\n";
  return os.str();
}

json json_report(const CurveFamily& family, const Analysis& analysis) {
  json out;
  out["schema"] = kReportSchema;
  out["n"] = family.disk().punctures();
  out["classification"] = to_string(analysis.classification.kind);
  if (analysis.classification.witness) {
    out["witness"] = {family.label(analysis.classification.witness->first),
                      family.label(analysis.classification.witness->second)};
  }
  json curves = json::array();
  for (std::size_t c = 0; c < family.size(); ++c) {
    json list = json::object();
    for (const auto& [s, count] : analysis.lists[c].counts()) list[to_string(s)] = count;
    curves.push_back({{"label", family.label(c)}, {"coords", coords_of(family.curve(c)).flat()}, {"loops", list}});
  }
  out["curves"] = curves;
  json iota = json::array();
  const std::size_t k = family.size();
  for (std::size_t x = 0; x < k; ++x) {
    iota.push_back(std::vector<Count>(analysis.iota.begin() + static_cast<std::ptrdiff_t>(x * k),
                                      analysis.iota.begin() + static_cast<std::ptrdiff_t>((x + 1) * k)));
  }
  out["intersections"] = iota;
  if (analysis.partition) {
    json parts = json::array();
    for (const auto& part : analysis.partition->partition.parts) {
      json labels = json::array();
      for (std::size_t c : part) labels.push_back(family.label(c));
      parts.push_back(labels);
    }
    out["partition"] = parts;
    out["complete"] = analysis.partition->complete();
    if (analysis.partition->failure) {
      const auto& f = *analysis.partition->failure;
      out["failure"] = {{"kind", to_string(f.kind)}, {"pair", {family.label(f.first), family.label(f.second)}}};
    }
  }
  if (analysis.group) {
    out["group"] = {{"factors", analysis.group->factors},
                    {"free", analysis.group->free_of_rank_k},
                    {"summary", analysis.group->summary()}};
    json dec = json::object();
    for (const DecisiveSet& d : analysis.decisive) {
      json symbols = json::array();
      for (const auto& s : d.symbols) symbols.push_back(to_string(s));
      dec[family.label(d.owner)] = symbols;
    }
    out["decisive"] = dec;
  }
  return out;
}

json to_json(const AuditReport& report) {
  json out;
  out["samples"] = report.samples;
  out["triples"] = report.triples;
  out["unplaced"] = report.unplaced;
  json v = json::array();
  for (const auto& x : report.violations) {
    v.push_back({{"seed", x.seed_label},
                 {"word", to_string(x.word)},
                 {"from_part", x.from_part + 1},
                 {"to_part", x.to_part + 1},
                 {"g", to_string(x.g)},
                 {"what", x.what}});
  }
  out["violations"] = v;
  return out;
}

}  // namespace pdisk
