#include "pgrowth/svg.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

namespace pgrowth {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string render_svg(const UnicriticalMap& m, const std::vector<RayTrace>& rays, const SvgOptions& opt) {
  const double scale = opt.size / (2.0 * opt.extent);
  auto px = [&](cplx z) { return fmt((z.real() + opt.extent) * scale); };
  auto py = [&](cplx z) { return fmt((opt.extent - z.imag()) * scale); };
  auto visible = [&](cplx z) { return std::abs(z.real()) <= opt.extent && std::abs(z.imag()) <= opt.extent; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << opt.size << "\" height=\""
      << opt.size << "\" viewBox=\"0 0 " << opt.size << ' ' << opt.size << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Backward orbit of a point converges onto the Julia set.
  std::mt19937 rng(opt.seed);
  std::uniform_int_distribution<int> pick(0, m.d() - 1);
  cplx z{1.0, 0.5};
  out << "<g fill=\"black\">\n";
  for (unsigned i = 0; i < opt.cloud_points + 50; ++i) {
    const cplx base = z - m.c();
    z = std::polar(std::pow(std::abs(base), 1.0 / m.d()),
                   (std::arg(base) + 2.0 * std::numbers::pi * pick(rng)) / m.d());
    if (i >= 50 && visible(z)) out << "<rect x=\"" << px(z) << "\" y=\"" << py(z) << "\" width=\"1\" height=\"1\"/>\n";
  }
  out << "</g>\n";

  const char* palette[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
  std::size_t colour = 0;
  for (const RayTrace& t : rays) {
    const char* stroke = palette[colour++ % 6];
    out << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1\" points=\"";
    bool first = true;
    for (cplx p : t.points) {
      if (!visible(p)) continue;
      if (!first) out << ' ';
      out << px(p) << ',' << py(p);
      first = false;
    }
    out << "\"><title>" << t.angle.str() << "</title></polyline>\n";
    if (t.landing && visible(*t.landing)) {
      out << "<circle cx=\"" << px(*t.landing) << "\" cy=\"" << py(*t.landing) << "\" r=\"3\" fill=\"" << stroke
          << "\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace pgrowth
