#pragma once

#include <string>
#include <vector>

#include "pdisk/intersection.hpp"

namespace pdisk {

struct SvgLayout {
  double spacing = 60.0;        // between neighbouring punctures
  double margin = 30.0;
  double puncture_radius = 4.0;
  double stroke = 1.6;
  std::vector<std::string> palette = {"#c0392b", "#2471a3", "#229954", "#b9770e", "#7d3c98", "#17a589"};
};

/// Punctures on the diameter, the vertical arcs, and one closed path per
/// curve component.  Deterministic for equal inputs.
std::string render_svg(const CurveFamily& family, const SvgLayout& layout = {});
std::string render_svg(const MultiCurve& curve, const SvgLayout& layout = {});

}  // namespace pdisk
