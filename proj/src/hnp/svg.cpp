#include "hnp/svg.hpp"

#include <algorithm>
#include <sstream>

namespace hnp {

namespace {

constexpr std::int64_t kRankUnit = 48;   // pixels per rank unit
constexpr std::int64_t kDegreeUnit = 24; // pixels per degree unit
constexpr std::int64_t kMargin = 40;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf"};

struct Point {
  std::int64_t x;  // rank units, possibly shifted for right alignment
  std::int64_t y;  // degree units
};

std::vector<Point> polygon_vertices(const Bundle& b, bool align_right) {
  std::vector<Point> pts;
  const std::int64_t shift = align_right ? -b.rank() : 0;
  std::int64_t x = 0, y = 0;
  pts.push_back({shift, 0});
  for (const auto& f : b.factors()) {
    x += checked_mul(f.mult, f.slope.den);
    y += checked_mul(f.mult, f.slope.num);
    pts.push_back({x + shift, y});
  }
  return pts;
}

}  // namespace

std::string render_svg(const std::vector<Bundle>& bundles, bool align_right) {
  std::vector<std::vector<Point>> polys;
  polys.reserve(bundles.size());
  std::int64_t min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  for (const auto& b : bundles) {
    polys.push_back(polygon_vertices(b, align_right));
    for (const auto& p : polys.back()) {
      min_x = std::min(min_x, p.x);
      max_x = std::max(max_x, p.x);
      min_y = std::min(min_y, p.y);
      max_y = std::max(max_y, p.y);
    }
  }

  const auto px = [&](const Point& p) { return (p.x - min_x) * kRankUnit + kMargin; };
  const auto py = [&](const Point& p) { return (max_y - p.y) * kDegreeUnit + kMargin; };

  const std::int64_t width = (max_x - min_x) * kRankUnit + 2 * kMargin;
  const std::int64_t height = (max_y - min_y) * kDegreeUnit + 2 * kMargin;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 "
      << width << " " << height << "\">\n";
  // x axis at degree 0
  out << "  <line x1=\"" << kMargin / 2 << "\" y1=\"" << py({0, 0}) << "\" x2=\""
      << width - kMargin / 2 << "\" y2=\"" << py({0, 0})
      << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const char* color = kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
    out << "  <polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
    for (std::size_t k = 0; k < polys[i].size(); ++k) {
      if (k) out << " ";
      out << px(polys[i][k]) << "," << py(polys[i][k]);
    }
    out << "\"/>\n";
    const std::int64_t shift = align_right ? bundles[i].rank() : 0;
    for (const auto& p : polys[i]) {
      out << "  <circle cx=\"" << px(p) << "\" cy=\"" << py(p)
          << "\" r=\"3\" fill=\"" << color << "\"/>\n";
      out << "  <text x=\"" << px(p) + 5 << "\" y=\"" << py(p) - 5
          << "\" font-size=\"11\" fill=\"" << color << "\">(" << p.x + shift << ","
          << p.y << ")</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace hnp
