#include "hqmap/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace hqmap {

namespace {

constexpr double kPi = std::numbers::pi;

struct Curve {
  std::vector<Cplx> points;
  const char* css_class;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string render_svg(const PlaneExtension& extension, const RenderOptions& options,
                       const std::optional<std::string>& label) {
  if (options.samples_per_curve < 2) {
    throw std::invalid_argument("samples_per_curve must be >= 2");
  }
  if (options.rays < 0) throw std::invalid_argument("rays must be >= 0");
  std::vector<double> radii = options.circle_radii;
  std::sort(radii.begin(), radii.end());
  if (radii.empty() || radii.front() <= 0.0) {
    throw std::invalid_argument("circle radii must be positive");
  }
  const double r_max = radii.back();
  const int samples = options.samples_per_curve;

  std::vector<Curve> curves;
  for (double r : radii) {
    Curve curve;
    curve.css_class = std::abs(r - 1.0) < 1e-12 ? "circle seam" : "circle";
    curve.points.reserve(samples + 1);
    for (int j = 0; j <= samples; ++j) {
      const double theta = 2.0 * kPi * j / samples;
      curve.points.push_back(
          extension.evaluate({r * std::cos(theta), r * std::sin(theta)}));
    }
    curves.push_back(std::move(curve));
  }
  for (int k = 0; k < options.rays; ++k) {
    const double phi = 2.0 * kPi * k / options.rays;
    const Cplx direction(std::cos(phi), std::sin(phi));
    Curve curve;
    curve.css_class = "ray";
    curve.points.reserve(samples);
    for (int j = 0; j < samples; ++j) {
      const double t = r_max * j / double(samples - 1);
      curve.points.push_back(extension.evaluate(t * direction));
    }
    curves.push_back(std::move(curve));
  }

  double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;
  bool first = true;
  for (const Curve& curve : curves) {
    for (const Cplx& p : curve.points) {
      if (first) {
        xmin = xmax = p.real();
        ymin = ymax = p.imag();
        first = false;
      } else {
        xmin = std::min(xmin, p.real());
        xmax = std::max(xmax, p.real());
        ymin = std::min(ymin, p.imag());
        ymax = std::max(ymax, p.imag());
      }
    }
  }
  const double span = std::max(xmax - xmin, ymax - ymin);
  const double pad = 0.05 * span;
  const double scale = 760.0 / (span + 2.0 * pad);
  const double x0 = xmin - pad;
  const double y1 = ymax + pad;  // svg y axis points down

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
         "viewBox=\"0 0 800 800\">\n";
  if (options.include_timestamp) {
    char stamp[64];
    const std::time_t now = std::time(nullptr);
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    svg << "<!-- generated: " << stamp << " -->\n";
  }
  if (label) svg << "<title>" << *label << "</title>\n";
  svg << "<style>\n"
         ".circle { fill: none; stroke: #3465a4; stroke-width: 1.2; }\n"
         ".ray { fill: none; stroke: #999999; stroke-width: 0.8; }\n"
         ".seam { stroke: #cc0000; stroke-width: 2.4; }\n"
         "</style>\n";
  svg << "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
  for (const Curve& curve : curves) {
    svg << "<polyline class=\"" << curve.css_class << "\" points=\"";
    for (std::size_t i = 0; i < curve.points.size(); ++i) {
      if (i) svg << ' ';
      const double px = 20.0 + (curve.points[i].real() - x0) * scale;
      const double py = 20.0 + (y1 - curve.points[i].imag()) * scale;
      svg << fmt(px) << ',' << fmt(py);
    }
    svg << "\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace hqmap
