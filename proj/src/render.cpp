#include "pdisk/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace pdisk {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

class Canvas {
 public:
  Canvas(int n, const SvgLayout& layout) : n_(n), layout_(layout) {
    width_ = 2 * layout.margin + (n + 1) * layout.spacing;
    height_ = width_;
    cy_ = height_ / 2;
  }

  double puncture_x(int k) const { return layout_.margin + k * layout_.spacing; }

  // x coordinate of the pos-th of `count` crossings with segment s.
  double crossing_x(int s, Count pos, Count count) const {
    const double left = s == 0 ? layout_.margin : puncture_x(s);
    const double right = s == n_ ? width_ - layout_.margin : puncture_x(s + 1);
    return left + (right - left) * static_cast<double>(pos + 1) / static_cast<double>(count + 1);
  }

  void open(std::ostringstream& os) const {
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width_) << "\" height=\""
       << num(height_) << "\" viewBox=\"0 0 " << num(width_) << " " << num(height_) << "\">\n"
       << "<ellipse cx=\"" << num(width_ / 2) << "\" cy=\"" << num(cy_) << "\" rx=\""
       << num(width_ / 2 - layout_.margin / 2) << "\" ry=\"" << num(height_ / 2 - layout_.margin / 2)
       << "\" fill=\"none\" stroke=\"#000\" stroke-width=\"1\"/>\n"
       << "<line x1=\"" << num(layout_.margin / 2) << "\" y1=\"" << num(cy_) << "\" x2=\""
       << num(width_ - layout_.margin / 2) << "\" y2=\"" << num(cy_)
       << "\" stroke=\"#999\" stroke-width=\"0.6\" stroke-dasharray=\"3 3\"/>\n";
    const double rx = width_ / 2 - layout_.margin / 2;
    const double ry = height_ / 2 - layout_.margin / 2;
    for (int i = 1; i <= n_ - 1; ++i) {
      const double x = (puncture_x(i) + puncture_x(i + 1)) / 2;
      const double t = (x - width_ / 2) / rx;
      const double half = ry * std::sqrt(std::max(0.0, 1 - t * t));
      os << "<line x1=\"" << num(x) << "\" y1=\"" << num(cy_ - half) << "\" x2=\"" << num(x) << "\" y2=\""
         << num(cy_ + half) << "\" stroke=\"#bbb\" stroke-width=\"0.8\"/>\n";
    }
  }

  void punctures(std::ostringstream& os) const {
    for (int k = 1; k <= n_; ++k) {
      os << "<circle cx=\"" << num(puncture_x(k)) << "\" cy=\"" << num(cy_) << "\" r=\""
         << num(layout_.puncture_radius) << "\" fill=\"#000\"/>\n";
    }
  }

  void curve(std::ostringstream& os, const MultiCurve& c, const std::string& colour) const {
    const Diagram d = build_diagram(n_, diagram_counts(c));
    std::vector<double> xs(d.size());
    for (std::size_t p = 0; p < d.size(); ++p) {
      const auto s = static_cast<std::size_t>(d.segment[p]);
      xs[p] = crossing_x(d.segment[p], d.position[p], static_cast<Count>(d.first[s + 1] - d.first[s]));
    }
    std::vector<bool> seen(d.size(), false);
    for (std::size_t start = 0; start < d.size(); ++start) {
      if (seen[start]) continue;
      os << "<path d=\"M " << num(xs[start]) << " " << num(cy_);
      std::size_t cur = start;
      bool below = true;
      do {
        seen[cur] = true;
        const std::size_t next = below ? d.lower[cur] : d.upper[cur];
        const double r = std::abs(xs[next] - xs[cur]) / 2;
        // Left to right with sweep 1 runs above the line.
        const bool rightward = xs[next] > xs[cur];
        const int sweep = (rightward != below) ? 1 : 0;
        os << " A " << num(r) << " " << num(r) << " 0 0 " << sweep << " " << num(xs[next]) << " " << num(cy_);
        cur = next;
        below = !below;
      } while (cur != start || !below);
      os << " Z\" fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"" << num(layout_.stroke) << "\"/>\n";
    }
  }

  static void close(std::ostringstream& os) { os << "</svg>\n"; }

 private:
  int n_;
  SvgLayout layout_;
  double width_;
  double height_;
  double cy_;
};

}  // namespace

std::string render_svg(const CurveFamily& family, const SvgLayout& layout) {
  const Canvas canvas(family.disk().punctures(), layout);
  std::ostringstream os;
  canvas.open(os);
  for (std::size_t k = 0; k < family.size(); ++k) {
    canvas.curve(os, family.curve(k), layout.palette[k % layout.palette.size()]);
  }
  canvas.punctures(os);
  Canvas::close(os);
  return os.str();
}

std::string render_svg(const MultiCurve& curve, const SvgLayout& layout) {
  const Canvas canvas(curve.punctures(), layout);
  std::ostringstream os;
  canvas.open(os);
  canvas.curve(os, tighten(curve), layout.palette.front());
  canvas.punctures(os);
  Canvas::close(os);
  return os.str();
}

}  // namespace pdisk
