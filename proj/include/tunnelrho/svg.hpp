#pragma once

#include <iosfwd>
#include <sstream>
#include <string>

namespace tunnelrho {

// Minimal SVG 1.1 emitter. Math coordinates go in, the writer flips the
// y axis and scales; all numbers are formatted locale-independently.
class SvgWriter {
public:
  // World window [x0,x1] x [y0,y1], rendered at `scale` px per unit
  // with a fixed pixel margin.
  SvgWriter(double x0, double y0, double x1, double y1, double scale = 360.0,
            double margin = 24.0);

  void line(double x1, double y1, double x2, double y2,
            const std::string& stroke, double width = 1.5,
            const std::string& dash = "");
  void circle(double cx, double cy, double r_px, const std::string& fill,
              const std::string& stroke = "none");
  void polygon(const std::string& path_points, const std::string& fill,
               const std::string& stroke, double opacity = 1.0);
  // Convenience: maps a world point into "x,y " form for polygon().
  std::string pt(double x, double y) const;
  void text(double x, double y, const std::string& s, double size_px = 13.0,
            const std::string& anchor = "middle");

  void write(std::ostream& os) const;

  static std::string fmt(double v);

private:
  double px(double x) const;
  double py(double y) const;

  double x0_, y0_, x1_, y1_, scale_, margin_;
  std::ostringstream body_;
};

}  // namespace tunnelrho
