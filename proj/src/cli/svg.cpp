#include "puiseux/cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace puiseux::cli {

namespace {

constexpr double kUnit = 48.0;
constexpr double kMargin = 32.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  return s == "-0.00" ? "0.00" : s;
}

double to_double(const Rat& r) { return r.raw().get_d(); }

}  // namespace

std::string render_svg(const NewtonPolygon& np, const SvgAnnotations& ann) {
  if (np.cloud.empty()) throw Error("render_svg: empty polygon");

  std::optional<SupportContact> line;
  if (ann.mu) line = support(np, *ann.mu);

  double lo_i = 0, hi_i = 1, hi_j = 1;
  for (const auto& p : np.cloud) {
    lo_i = std::min(lo_i, std::floor(to_double(p.i)));
    hi_i = std::max(hi_i, std::ceil(to_double(p.i)));
    hi_j = std::max(hi_j, static_cast<double>(p.j));
  }
  if (line) hi_i = std::max(hi_i, std::ceil(to_double(line->tau)));
  hi_i += 1;
  hi_j += 1;

  const double width = 2 * kMargin + (hi_i - lo_i) * kUnit;
  const double height = 2 * kMargin + hi_j * kUnit;
  auto X = [&](double i) { return num(kMargin + (i - lo_i) * kUnit); };
  auto Y = [&](double j) { return num(kMargin + (hi_j - j) * kUnit); };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width)
     << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n"
     << "<style>.grid{stroke:#ddd;stroke-width:1}.axis{stroke:#000;stroke-width:1.5}"
        ".chain{fill:none;stroke:#c00;stroke-width:2}.support{stroke:#06c;stroke-width:1.5;"
        "stroke-dasharray:6 4}.point{fill:#000}.vertex{fill:#c00}text{font:12px sans-serif}</style>\n";

  for (double i = lo_i; i <= hi_i; i += 1)
    os << "<line class=\"grid\" x1=\"" << X(i) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(i) << "\" y2=\""
       << Y(hi_j) << "\"/>\n";
  for (double j = 0; j <= hi_j; j += 1)
    os << "<line class=\"grid\" x1=\"" << X(lo_i) << "\" y1=\"" << Y(j) << "\" x2=\"" << X(hi_i)
       << "\" y2=\"" << Y(j) << "\"/>\n";
  os << "<line class=\"axis\" x1=\"" << X(lo_i) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(hi_i) << "\" y2=\""
     << Y(0) << "\"/>\n";
  os << "<line class=\"axis\" x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(0) << "\" y2=\""
     << Y(hi_j) << "\"/>\n";

  if (np.vertices.size() >= 2) {
    os << "<polyline class=\"chain\" points=\"";
    for (std::size_t k = 0; k < np.vertices.size(); ++k)
      os << (k ? " " : "") << X(to_double(np.vertices[k].i)) << "," << Y(np.vertices[k].j);
    os << "\"/>\n";
  }

  if (line) {
    // i + mu j = tau, from the i axis up to the top of the page or its left edge
    const double mu = to_double(line->mu), tau = to_double(line->tau);
    const double top = std::min(hi_j, (tau - lo_i) / mu);
    os << "<line class=\"support\" x1=\"" << X(tau) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(tau - mu * top)
       << "\" y2=\"" << Y(top) << "\"/>\n";
    os << "<text class=\"tau\" x=\"" << X(tau) << "\" y=\"" << num(kMargin + hi_j * kUnit + 16)
       << "\" text-anchor=\"middle\">tau = " << line->tau << "</text>\n";
  }

  for (const auto& p : np.cloud) {
    const bool vertex = std::find(np.vertices.begin(), np.vertices.end(), p) != np.vertices.end();
    os << "<circle class=\"" << (vertex ? "vertex" : "point") << "\" cx=\"" << X(to_double(p.i)) << "\" cy=\""
       << Y(p.j) << "\" r=\"4\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

void emit_svg(const NewtonPolygon& np, const SvgAnnotations& ann, const std::string& path) {
  const std::string svg = render_svg(np, ann);
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path);
  f << svg;
  f.close();
  if (!f) throw Error("cannot write " + path);
}

}  // namespace puiseux::cli
