#include "arsite/figure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "arsite/newton.hpp"

namespace arsite::cli {

namespace {

constexpr double kCell = 24.0;
constexpr double kMargin = 32.0;

constexpr const char* kRegionFill = "#f4d03f";
constexpr const char* kHullStroke = "#1e8449";
constexpr const char* kMuStroke = "#c0392b";
constexpr const char* kLambdaStroke = "#2471a3";

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  if (s == "-0") s = "0";
  return s;
}

struct Frame {
  double window;
  double x(double a) const { return kMargin + a * kCell; }
  double y(double b) const { return kMargin + (window - b) * kCell; }
  std::string point(double a, double b) const { return num(x(a)) + "," + num(y(b)); }
};

void segment(std::ostringstream& out, const Frame& f, double a0, double b0, double a1, double b1,
             const char* stroke, const char* id) {
  out << "  <line id=\"" << id << "\" x1=\"" << num(f.x(a0)) << "\" y1=\"" << num(f.y(b0)) << "\" x2=\""
      << num(f.x(a1)) << "\" y2=\"" << num(f.y(b1)) << "\" stroke=\"" << stroke
      << "\" stroke-width=\"2\" stroke-dasharray=\"6,4\"/>\n";
}

// Part of slope*a + b = level inside [0, w]^2, if any.
void support_line(std::ostringstream& out, const Frame& f, double slope, double level, const char* stroke,
                  const char* id) {
  const double w = f.window;
  const double a_lo = std::max(0.0, (level - w) / slope);
  const double a_hi = std::min(w, level / slope);
  if (a_lo > a_hi) return;
  segment(out, f, a_lo, level - slope * a_lo, a_hi, level - slope * a_hi, stroke, id);
}

}  // namespace

std::string emit_figure(const FigureSpec& spec) {
  const auto window = static_cast<Coord>(spec.window);
  if (spec.window < 1 || window < 1 + spec.set.max_coordinate())
    throw DomainError(ErrorCode::window_too_small,
                      "window " + std::to_string(spec.window) + " needs to be at least " +
                          std::to_string(1 + spec.set.max_coordinate()));
  const Frame f{static_cast<double>(window)};
  const double side = 2 * kMargin + f.window * kCell;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(side) << "\" height=\""
      << num(side) << "\" viewBox=\"0 0 " << num(side) << " " << num(side) << "\">\n"
      << "  <rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

  if (spec.layers.region) {
    out << "  <g id=\"region\" fill=\"" << kRegionFill << "\" stroke=\"none\">\n";
    const BitMatrix cells = rasterize(spec.set, spec.window);
    for (Coord b = window - 1; b >= 0; --b)
      for (Coord a = 0; a < window; ++a)
        if (cells.at(static_cast<std::size_t>(a), static_cast<std::size_t>(b)))
          out << "    <rect x=\"" << num(f.x(a)) << "\" y=\"" << num(f.y(b + 1)) << "\" width=\"" << num(kCell)
              << "\" height=\"" << num(kCell) << "\"/>\n";
    out << "  </g>\n";
  }

  out << "  <g id=\"grid\" stroke=\"#d0d0d0\" stroke-width=\"1\">\n";
  for (Coord i = 0; i <= window; ++i) {
    out << "    <line x1=\"" << num(f.x(i)) << "\" y1=\"" << num(f.y(0)) << "\" x2=\"" << num(f.x(i)) << "\" y2=\""
        << num(f.y(f.window)) << "\"/>\n";
    out << "    <line x1=\"" << num(f.x(0)) << "\" y1=\"" << num(f.y(i)) << "\" x2=\"" << num(f.x(f.window))
        << "\" y2=\"" << num(f.y(i)) << "\"/>\n";
  }
  out << "  </g>\n";
  out << "  <g id=\"axes\" stroke=\"#000000\" stroke-width=\"1.5\">\n"
      << "    <line x1=\"" << num(f.x(0)) << "\" y1=\"" << num(f.y(0)) << "\" x2=\"" << num(f.x(f.window))
      << "\" y2=\"" << num(f.y(0)) << "\"/>\n"
      << "    <line x1=\"" << num(f.x(0)) << "\" y1=\"" << num(f.y(0)) << "\" x2=\"" << num(f.x(0)) << "\" y2=\""
      << num(f.y(f.window)) << "\"/>\n"
      << "  </g>\n";

  if (spec.layers.hull && !spec.set.is_zero()) {
    const NewtonPolygon hull = gamma(spec.set);
    const auto vertices = hull.vertices();
    std::string path = f.point(static_cast<double>(vertices.front().a), f.window);
    for (const Point& v : vertices) path += " " + f.point(static_cast<double>(v.a), static_cast<double>(v.b));
    path += " " + f.point(f.window, static_cast<double>(vertices.back().b));
    out << "  <g id=\"hull\" stroke=\"" << kHullStroke << "\" fill=\"" << kHullStroke << "\">\n"
        << "    <polyline points=\"" << path << "\" fill=\"none\" stroke-width=\"2.5\"/>\n";
    for (const Point& v : vertices)
      out << "    <circle cx=\"" << num(f.x(static_cast<double>(v.a))) << "\" cy=\""
          << num(f.y(static_cast<double>(v.b))) << "\" r=\"3.5\"/>\n";
    out << "  </g>\n";
  }

  if (spec.layers.mu_line) {
    const NBar level = mu(spec.set);
    if (!level.is_zero())
      support_line(out, f, 1.0, static_cast<double>(level.exponent().value()), kMuStroke, "mu-line");
  }

  if (spec.layers.lambda_line && spec.lambda) {
    const CorrespondenceElement alpha = evaluate(*spec.lambda, spec.set);
    if (!alpha.is_zero())
      support_line(out, f, spec.lambda->value().to_double(), alpha.alpha().value().to_double(), kLambdaStroke,
                   "lambda-line");
  }

  out << "</svg>\n";
  return out.str();
}

}  // namespace arsite::cli
