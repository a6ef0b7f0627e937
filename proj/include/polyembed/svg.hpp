#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "polyembed/core.hpp"
#include "polyembed/geometry.hpp"
#include "polyembed/io.hpp"

namespace polyembed {

// Renders vertices, an optional closed outline through them in input order,
// and a set of highlighted index-pair edges. Pure integer layout: the y axis
// is flipped so the picture matches the usual mathematical orientation.
inline std::string svg_document(const std::vector<Point>& verts,
                                bool closed_outline,
                                const std::vector<std::pair<int, int>>& edges) {
  std::int64_t minx = 0, maxx = 0, miny = 0, maxy = 0;
  if (!verts.empty()) {
    minx = maxx = verts[0].x;
    miny = maxy = verts[0].y;
    for (const Point& p : verts) {
      minx = std::min(minx, p.x);
      maxx = std::max(maxx, p.x);
      miny = std::min(miny, p.y);
      maxy = std::max(maxy, p.y);
    }
  }
  const std::int64_t spanx = maxx - minx;
  const std::int64_t spany = maxy - miny;
  const std::int64_t mx = std::max<std::int64_t>(1, spanx / 20);
  const std::int64_t my = std::max<std::int64_t>(1, spany / 20);
  const std::int64_t width = spanx + 2 * mx;
  const std::int64_t height = spany + 2 * my;
  const std::int64_t span = std::max(spanx, spany);
  const std::int64_t stroke = std::max<std::int64_t>(1, span / 256);
  const std::int64_t radius = std::max<std::int64_t>(2, span / 128);
  const std::int64_t font = std::max<std::int64_t>(8, span / 64);

  const auto sx = [&](std::int64_t x) { return x - minx + mx; };
  const auto sy = [&](std::int64_t y) { return maxy - y + my; };
  const auto num = [](std::int64_t v) { return std::to_string(v); };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " +
         num(width) + " " + num(height) + "\">\n";
  out += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  if (closed_outline && verts.size() >= 2) {
    out += "  <polygon points=\"";
    for (size_t i = 0; i < verts.size(); ++i) {
      if (i) out += " ";
      out += num(sx(verts[i].x)) + "," + num(sy(verts[i].y));
    }
    out += "\" fill=\"#f4f4f8\" stroke=\"#222\" stroke-width=\"" +
           num(stroke) + "\"/>\n";
  }

  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= static_cast<int>(verts.size()) ||
        b >= static_cast<int>(verts.size())) {
      continue;
    }
    const Point& pa = verts[static_cast<size_t>(a)];
    const Point& pb = verts[static_cast<size_t>(b)];
    out += "  <line x1=\"" + num(sx(pa.x)) + "\" y1=\"" + num(sy(pa.y)) +
           "\" x2=\"" + num(sx(pb.x)) + "\" y2=\"" + num(sy(pb.y)) +
           "\" stroke=\"crimson\" stroke-width=\"" + num(stroke) + "\"/>\n";
  }

  for (size_t i = 0; i < verts.size(); ++i) {
    const Point& p = verts[i];
    out += "  <circle cx=\"" + num(sx(p.x)) + "\" cy=\"" + num(sy(p.y)) +
           "\" r=\"" + num(radius) + "\" fill=\"#1453a3\"/>\n";
    out += "  <text x=\"" + num(sx(p.x) + radius) + "\" y=\"" +
           num(sy(p.y) - radius) + "\" font-size=\"" + num(font) +
           "\" font-family=\"monospace\">" + std::to_string(i) + "</text>\n";
  }

  out += "</svg>\n";
  return out;
}

inline Result<bool> render_svg(const std::string& path,
                               const std::vector<Point>& verts,
                               bool closed_outline,
                               const std::vector<std::pair<int, int>>& edges) {
  return write_text_file(path, svg_document(verts, closed_outline, edges));
}

}  // namespace polyembed
