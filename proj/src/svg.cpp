#include "ledyn/svg.hpp"

#include <cstdio>

namespace ledyn {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// text content goes through here; attribute values are library-chosen literals
std::string esc(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '&') out += "&amp;";
    else if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else out += c;
  }
  return out;
}

} // namespace

SvgCanvas::SvgCanvas(int width, int height, double x0, double x1, double y0, double y1)
    : w_(width), h_(height), x0_(x0), x1_(x1), y0_(y0), y1_(y1) {}

double SvgCanvas::px(double x) const { return (x - x0_) / (x1_ - x0_) * w_; }
double SvgCanvas::py(double y) const { return h_ - (y - y0_) / (y1_ - y0_) * h_; }

void SvgCanvas::rect_world(double x0, double x1, double y0, double y1,
                           const std::string& fill) {
  double X = px(x0), Y = py(y1);
  body_ += "<rect x=\"" + num(X) + "\" y=\"" + num(Y) + "\" width=\"" +
           num(px(x1) - X) + "\" height=\"" + num(py(y0) - Y) + "\" fill=\"" + fill +
           "\"/>\n";
}

void SvgCanvas::polyline(const std::vector<State>& pts, const std::string& stroke,
                         double stroke_width, bool dashed) {
  if (pts.size() < 2)
    return;
  body_ += "<polyline fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"" +
           num(stroke_width) + "\"";
  if (dashed)
    body_ += " stroke-dasharray=\"6 4\"";
  body_ += " points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i)
      body_ += ' ';
    body_ += num(px(pts[i].x)) + "," + num(py(pts[i].y));
  }
  body_ += "\"/>\n";
}

void SvgCanvas::segment(double x0, double y0, double x1, double y1,
                        const std::string& stroke, double stroke_width) {
  body_ += "<line x1=\"" + num(px(x0)) + "\" y1=\"" + num(py(y0)) + "\" x2=\"" +
           num(px(x1)) + "\" y2=\"" + num(py(y1)) + "\" stroke=\"" + stroke +
           "\" stroke-width=\"" + num(stroke_width) + "\"/>\n";
}

void SvgCanvas::circle(double cx, double cy, double radius_px, const std::string& fill,
                       const std::string& stroke) {
  body_ += "<circle cx=\"" + num(px(cx)) + "\" cy=\"" + num(py(cy)) + "\" r=\"" +
           num(radius_px) + "\" fill=\"" + fill + "\" stroke=\"" + stroke + "\"/>\n";
}

void SvgCanvas::text(double x, double y, const std::string& s, int size_px,
                     const std::string& fill) {
  body_ += "<text x=\"" + num(px(x)) + "\" y=\"" + num(py(y)) + "\" font-size=\"" +
           std::to_string(size_px) + "\" font-family=\"sans-serif\" fill=\"" + fill +
           "\">" + esc(s) + "</text>\n";
}

std::string SvgCanvas::str() const {
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                    std::to_string(w_) + "\" height=\"" + std::to_string(h_) +
                    "\" viewBox=\"0 0 " + std::to_string(w_) + " " +
                    std::to_string(h_) + "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(w_) + "\" height=\"" +
         std::to_string(h_) + "\" fill=\"#ffffff\"/>\n";
  out += body_;
  out += "</svg>\n";
  return out;
}

} // namespace ledyn
