#include "esz/svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>

namespace esz {

namespace {

constexpr std::array<const char*, 6> kPalette{"#1f4e9c", "#c0392b", "#27864a",
                                              "#8e44ad", "#d68910", "#2c3e50"};

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string render_svg(const PointFile& f, const std::vector<Index>& highlight,
                       const FigureOptions& options) {
  const auto& s = points_of(f);
  const auto* colored = std::get_if<ColoredPointSet>(&f);

  std::int64_t xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  if (!s.empty()) {
    xmin = xmax = s[0].x;
    ymin = ymax = s[0].y;
    for (const auto& p : s) {
      xmin = std::min(xmin, p.x);
      xmax = std::max(xmax, p.x);
      ymin = std::min(ymin, p.y);
      ymax = std::max(ymax, p.y);
    }
  }
  const double inner = options.size - 2.0 * options.margin;
  const double sx = xmax > xmin ? inner / static_cast<double>(xmax - xmin) : 0.0;
  const double sy = ymax > ymin ? inner / static_cast<double>(ymax - ymin) : 0.0;
  auto px = [&](const Point& p) {
    return options.margin + (xmax > xmin ? (p.x - xmin) * sx : inner / 2);
  };
  // SVG y grows downward.
  auto py = [&](const Point& p) {
    return options.size - options.margin - (ymax > ymin ? (p.y - ymin) * sy : inner / 2);
  };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.size << "\" height=\""
     << options.size << "\" viewBox=\"0 0 " << options.size << ' ' << options.size << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  if (highlight.size() >= 2) {
    os << "<polygon fill=\"#f4d03f\" fill-opacity=\"0.35\" stroke=\"#b7950b\" stroke-width=\"2\" "
          "points=\"";
    for (std::size_t i = 0; i < highlight.size(); ++i) {
      const auto& p = s[highlight[i]];
      os << (i ? " " : "") << fixed(px(p)) << ',' << fixed(py(p));
    }
    os << "\"/>\n";
  }
  for (Index i = 0; i < s.size(); ++i) {
    const Color c = colored ? colored->color(i) : 0;
    os << "<circle cx=\"" << fixed(px(s[i])) << "\" cy=\"" << fixed(py(s[i])) << "\" r=\""
       << fixed(options.radius) << "\" fill=\"" << kPalette[c % kPalette.size()] << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace esz
