#pragma once

// Dehn twists.  A twist about c is conjugated from the full twist about the
// relaxed curve that an untangling braid carries c onto; the positive twist
// is the full twist by positive half twists.

#include <string>
#include <vector>

#include "pdisk/braid.hpp"
#include "pdisk/intersection.hpp"

namespace pdisk {

/// t_k^e, where k is a 1-based index into the family.
struct TwistLetter {
  int generator = 1;
  Count exponent = 1;

  bool operator==(const TwistLetter&) const = default;
};

struct TwistWord {
  std::vector<TwistLetter> letters;

  bool empty() const noexcept { return letters.empty(); }
  bool operator==(const TwistWord&) const = default;
};

/// Merges neighbouring powers of one generator and drops zero exponents.
TwistWord free_reduce(const TwistWord& word);
TwistWord inverse(const TwistWord& word);
bool is_reduced(const TwistWord& word);

/// "t1^2 t3^-1 t2"; an empty string is the empty word.
TwistWord parse_word(const std::string& text);

/// Inverse of parse_word; "1" for the empty word.
std::string to_string(const TwistWord& word);

/// t^power_about(target).  power must be nonzero.
MultiCurve dehn_twist(const MultiCurve& target, const MultiCurve& about, Count power);

/// Twists about the curves of a family, with the untanglings cached.
class Twister {
 public:
  explicit Twister(const CurveFamily& family);

  const CurveFamily& family() const noexcept { return family_; }

  /// Twist about family curve k (1-based).
  MultiCurve twist(const MultiCurve& target, int generator, Count power) const;

  /// The rightmost letter acts first.
  MultiCurve apply_word(const TwistWord& word, const MultiCurve& seed) const;

 private:
  CurveFamily family_;
  std::vector<Untangling> untangled_;
};

MultiCurve apply_word(const TwistWord& word, const MultiCurve& seed, const CurveFamily& family);

struct TwistLoopViolation {
  Count power = 0;
  /// Either "R(t_c1^p(c2))" or "L(t_c2^p(c1))".
  std::string check;
};

struct TwistLoopReport {
  bool precondition_met = false;
  std::string message;
  std::size_t powers_checked = 0;
  std::vector<TwistLoopViolation> violations;

  bool ok() const { return precondition_met && violations.empty(); }
};

/// Checks that twisting c2 about c1 keeps the right loop of c1 at the
/// region pair, and twisting c1 about c2 keeps the left loop of c2, for
/// every nonzero power.
TwistLoopReport check_twist_loops(const MultiCurve& c1, const MultiCurve& c2, RegionPair region,
                        const std::vector<Count>& powers);

}  // namespace pdisk
