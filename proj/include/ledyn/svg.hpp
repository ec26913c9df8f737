#pragma once

#include "ledyn/model.hpp"

#include <string>
#include <vector>

namespace ledyn {

// Minimal SVG writer with a fixed world-to-pixel map. Output is byte
// deterministic: %.6g coordinates, insertion order, no timestamps.
class SvgCanvas {
public:
  SvgCanvas(int width, int height, double x0, double x1, double y0, double y1);

  void rect_world(double x0, double x1, double y0, double y1, const std::string& fill);
  void polyline(const std::vector<State>& pts, const std::string& stroke,
                double stroke_width = 1.0, bool dashed = false);
  void segment(double x0, double y0, double x1, double y1, const std::string& stroke,
               double stroke_width = 1.0);
  void circle(double cx, double cy, double radius_px, const std::string& fill,
              const std::string& stroke = "none");
  void text(double x, double y, const std::string& s, int size_px = 12,
            const std::string& fill = "#000");

  std::string str() const; // complete document

  double px(double x) const;
  double py(double y) const;

private:
  int w_, h_;
  double x0_, x1_, y0_, y1_;
  std::string body_;
};

} // namespace ledyn
