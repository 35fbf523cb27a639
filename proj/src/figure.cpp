#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "quadpell/errors.hpp"
#include "quadpell/report.hpp"

namespace quadpell::report {

namespace {

constexpr double kCenter = 256.0;
constexpr double kReach = 200.0;

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

void line(std::ostringstream& out, const Rat& slope, const char* colour, const std::string& label) {
  const double s = slope.raw().get_d();
  const double m = std::max(1.0, std::abs(s));
  const double u = kReach / m, v = kReach * s / m;
  out << "  <line x1=\"" << fixed(kCenter - u) << "\" y1=\"" << fixed(kCenter + v) << "\" x2=\""
      << fixed(kCenter + u) << "\" y2=\"" << fixed(kCenter - v) << "\" stroke=\"" << colour
      << "\" stroke-width=\"2\"/>\n";
  out << "  <text x=\"" << fixed(kCenter + u * 1.08) << "\" y=\"" << fixed(kCenter - v * 1.08)
      << "\" fill=\"" << colour << "\" font-family=\"monospace\" font-size=\"13\" text-anchor=\"middle\">"
      << label << "</text>\n";
}

}  // namespace

std::string render_figure(const Rat& a, const Rat& b) {
  auto bis = bisect(a, b);
  if (!bis) throw DomainError(ErrorKind::NoRationalBisector, "no rational bisector for a = " + a.str() + ", b = " + b.str());
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"512\" height=\"512\" viewBox=\"0 0 512 512\">\n";
  out << "  <rect width=\"512\" height=\"512\" fill=\"white\"/>\n";
  out << "  <line x1=\"16\" y1=\"256\" x2=\"496\" y2=\"256\" stroke=\"#cccccc\"/>\n";
  out << "  <line x1=\"256\" y1=\"16\" x2=\"256\" y2=\"496\" stroke=\"#cccccc\"/>\n";
  line(out, a, "black", "a=" + a.str());
  line(out, b, "black", "b=" + b.str());
  line(out, bis->c_plus, "#c0392b", "c+=" + bis->c_plus.str());
  line(out, bis->c_minus, "#2471a3", "c-=" + bis->c_minus.str());
  out << "</svg>\n";
  return out.str();
}

}  // namespace quadpell::report
