#include "tunnelrho/svg.hpp"

#include <charconv>
#include <ostream>

namespace tunnelrho {

SvgWriter::SvgWriter(double x0, double y0, double x1, double y1, double scale,
                     double margin)
    : x0_(x0), y0_(y0), x1_(x1), y1_(y1), scale_(scale), margin_(margin) {}

std::string SvgWriter::fmt(double v) {
  char buf[48];
  auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 3);
  return std::string(buf, res.ptr);
}

double SvgWriter::px(double x) const { return (x - x0_) * scale_ + margin_; }
double SvgWriter::py(double y) const { return (y1_ - y) * scale_ + margin_; }

void SvgWriter::line(double x1, double y1, double x2, double y2,
                     const std::string& stroke, double width,
                     const std::string& dash) {
  body_ << "  <line x1=\"" << fmt(px(x1)) << "\" y1=\"" << fmt(py(y1))
        << "\" x2=\"" << fmt(px(x2)) << "\" y2=\"" << fmt(py(y2))
        << "\" stroke=\"" << stroke << "\" stroke-width=\"" << fmt(width)
        << "\"";
  if (!dash.empty()) body_ << " stroke-dasharray=\"" << dash << "\"";
  body_ << "/>\n";
}

void SvgWriter::circle(double cx, double cy, double r_px,
                       const std::string& fill, const std::string& stroke) {
  body_ << "  <circle cx=\"" << fmt(px(cx)) << "\" cy=\"" << fmt(py(cy))
        << "\" r=\"" << fmt(r_px) << "\" fill=\"" << fill << "\" stroke=\""
        << stroke << "\"/>\n";
}

std::string SvgWriter::pt(double x, double y) const {
  return fmt(px(x)) + "," + fmt(py(y)) + " ";
}

void SvgWriter::polygon(const std::string& path_points, const std::string& fill,
                        const std::string& stroke, double opacity) {
  body_ << "  <polygon points=\"" << path_points << "\" fill=\"" << fill
        << "\" stroke=\"" << stroke << "\" fill-opacity=\"" << fmt(opacity)
        << "\"/>\n";
}

void SvgWriter::text(double x, double y, const std::string& s, double size_px,
                     const std::string& anchor) {
  body_ << "  <text x=\"" << fmt(px(x)) << "\" y=\"" << fmt(py(y))
        << "\" font-size=\"" << fmt(size_px)
        << "\" font-family=\"sans-serif\" text-anchor=\"" << anchor << "\">"
        << s << "</text>\n";
}

void SvgWriter::write(std::ostream& os) const {
  double w = (x1_ - x0_) * scale_ + 2 * margin_;
  double h = (y1_ - y0_) * scale_ + 2 * margin_;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
     << "viewBox=\"0 0 " << fmt(w) << " " << fmt(h) << "\" width=\"" << fmt(w)
     << "\" height=\"" << fmt(h) << "\">\n";
  os << body_.str();
  os << "</svg>\n";
}

}  // namespace tunnelrho
