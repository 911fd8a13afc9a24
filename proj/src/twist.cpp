#include "pdisk/twist.hpp"

#include <regex>
#include <sstream>
#include <stdexcept>

#include "pdisk/dynnikov.hpp"
#include "pdisk/loops.hpp"

namespace pdisk {

TwistWord free_reduce(const TwistWord& word) {
  TwistWord out;
  for (const TwistLetter& l : word.letters) {
    if (l.exponent == 0) continue;
    if (!out.letters.empty() && out.letters.back().generator == l.generator) {
      out.letters.back().exponent += l.exponent;
      if (out.letters.back().exponent == 0) out.letters.pop_back();
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

TwistWord inverse(const TwistWord& word) {
  TwistWord out;
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
    out.letters.push_back({it->generator, -it->exponent});
  }
  return out;
}

bool is_reduced(const TwistWord& word) { return free_reduce(word) == word; }

TwistWord parse_word(const std::string& text) {
  static const std::regex token(R"(t_?\{?(\d+)\}?(?:\^\{?([+-]?\d+)\}?)?)");
  TwistWord out;
  std::istringstream in(text);
  std::string piece;
  while (in >> piece) {
    std::smatch m;
    if (!std::regex_match(piece, m, token)) throw std::invalid_argument("bad twist letter: " + piece);
    TwistLetter l;
    l.generator = std::stoi(m[1]);
    l.exponent = m[2].matched ? std::stoll(m[2]) : 1;
    if (l.generator < 1) throw std::invalid_argument("bad twist letter: " + piece);
    out.letters.push_back(l);
  }
  return out;
}

std::string to_string(const TwistWord& word) {
  if (word.empty()) return "1";
  std::ostringstream os;
  for (std::size_t k = 0; k < word.letters.size(); ++k) {
    if (k) os << ' ';
    os << 't' << word.letters[k].generator;
    if (word.letters[k].exponent != 1) os << '^' << word.letters[k].exponent;
  }
  return os.str();
}

namespace {

MultiCurve twist_with(const MultiCurve& target, const Untangling& about, Count power) {
  if (power == 0) throw std::invalid_argument("twist power must be nonzero");
  const MultiCurve moved = apply_braid(tighten(target), about.moves);
  return apply_braid(full_twist(moved, about.i, about.j, power), inverse(about.moves));
}

}  // namespace

MultiCurve dehn_twist(const MultiCurve& target, const MultiCurve& about, Count power) {
  if (!(target.disk() == about.disk())) throw CurveError("curves live on different disks");
  if (power == 0) throw std::invalid_argument("twist power must be nonzero");
  return twist_with(target, untangle(about), power);
}

Twister::Twister(const CurveFamily& family) : family_(family) {
  untangled_.reserve(family_.size());
  for (const auto& c : family_.curves()) untangled_.push_back(untangle(c));
}

MultiCurve Twister::twist(const MultiCurve& target, int generator, Count power) const {
  if (generator < 1 || static_cast<std::size_t>(generator) > untangled_.size()) {
    throw std::out_of_range("unbound generator t" + std::to_string(generator));
  }
  return twist_with(target, untangled_[static_cast<std::size_t>(generator - 1)], power);
}

MultiCurve Twister::apply_word(const TwistWord& word, const MultiCurve& seed) const {
  for (const TwistLetter& l : word.letters) {
    if (l.generator < 1 || static_cast<std::size_t>(l.generator) > untangled_.size()) {
      throw std::out_of_range("unbound generator t" + std::to_string(l.generator));
    }
  }
  MultiCurve out = tighten(seed);
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
    if (it->exponent != 0) out = twist(out, it->generator, it->exponent);
  }
  return out;
}

MultiCurve apply_word(const TwistWord& word, const MultiCurve& seed, const CurveFamily& family) {
  return Twister(family).apply_word(word, seed);
}

namespace {

Count loop_count(const MultiCurve& curve, const LoopSymbol& s) {
  const DynnikovCoords c = coords_of(curve);
  const IntersectionVector v = crossings_from_coords(c);
  const LoopCounts counts = loops_closed_form(extend(c, v), v, s.i, s.j);
  return s.kind == LoopSymbol::Kind::right ? counts.right : counts.left;
}

}  // namespace

TwistLoopReport check_twist_loops(const MultiCurve& c1, const MultiCurve& c2, RegionPair region,
                        const std::vector<Count>& powers) {
  TwistLoopReport report;
  const LoopSymbol right = right_loop(region.i, region.j);
  const LoopSymbol left = left_loop(region.i, region.j);
  if (loop_count(c1, right) == 0 || loop_count(c2, left) == 0) {
    report.message = "not opposite at region (" + std::to_string(region.i) + "," + std::to_string(region.j) + ")";
    return report;
  }
  report.precondition_met = true;
  const Untangling u1 = untangle(c1);
  const Untangling u2 = untangle(c2);
  for (Count p : powers) {
    if (p == 0) continue;
    ++report.powers_checked;
    if (loop_count(twist_with(c2, u1, p), right) == 0) report.violations.push_back({p, "R(t_c1^p(c2))"});
    if (loop_count(twist_with(c1, u2, p), left) == 0) report.violations.push_back({p, "L(t_c2^p(c1))"});
  }
  report.message = report.violations.empty() ? "ok" : "violated";
  return report;
}

}  // namespace pdisk
