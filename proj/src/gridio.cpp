#include "dough/gridio.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "dough/errors.hpp"

namespace dough {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_mm(double v) {  // meters -> millimeter SVG units
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v * 1000.0);
  return buf;
}

}  // namespace

void save_grid(const HeightMap& hm, const std::string& path) {
  std::ofstream f(path, std::ios::binary);  // binary: keep LF endings everywhere
  if (!f) raise(ErrorCode::IoError, "cannot open for writing: " + path);
  f << "doughgrid 1\n";
  f << hm.nx() << ' ' << hm.ny() << ' ' << fmt(hm.resolution()) << ' '
    << fmt(hm.origin().x) << ' ' << fmt(hm.origin().y) << '\n';
  for (int iy = 0; iy < hm.ny(); ++iy) {
    for (int ix = 0; ix < hm.nx(); ++ix) {
      if (ix) f << ' ';
      f << fmt(hm.at(ix, iy));
    }
    f << '\n';
  }
  if (!f) raise(ErrorCode::IoError, "write failed: " + path);
}

HeightMap load_grid(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) raise(ErrorCode::IoError, "cannot open: " + path);
  std::string magic;
  int version = 0;
  f >> magic >> version;
  if (magic != "doughgrid" || version != 1)
    raise(ErrorCode::IoError, "unrecognized grid header in " + path);
  int nx = 0, ny = 0;
  double res = 0.0, ox = 0.0, oy = 0.0;
  f >> nx >> ny >> res >> ox >> oy;
  if (!f || nx <= 0 || ny <= 0 || res <= 0.0)
    raise(ErrorCode::IoError, "bad grid dimensions in " + path);
  HeightMap hm(nx, ny, res, {ox, oy});
  for (int iy = 0; iy < ny; ++iy)
    for (int ix = 0; ix < nx; ++ix) {
      double v = 0.0;
      if (!(f >> v)) raise(ErrorCode::IoError, "truncated grid data in " + path);
      hm.at(ix, iy) = v;
    }
  return hm;
}

std::string svg_scene(const HeightMap& hm, const Disk& target, const Contour* contour,
                      const RollAction* action, double iou_value) {
  const double w = hm.nx() * hm.resolution() * 1000.0;
  const double h = hm.ny() * hm.resolution() * 1000.0;
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << w << ' ' << h
    << "\" width=\"" << w << "\" height=\"" << h << "\">\n";
  s << "<rect x=\"0\" y=\"0\" width=\"" << w << "\" height=\"" << h
    << "\" fill=\"#fafafa\" stroke=\"#888\" stroke-width=\"0.5\"/>\n";
  if (contour && contour->size() >= 3) {
    s << "<polygon fill=\"#d9b38c\" fill-opacity=\"0.85\" stroke=\"#8a5a2b\" "
         "stroke-width=\"0.4\" points=\"";
    for (std::size_t i = 0; i < contour->size(); ++i) {
      if (i) s << ' ';
      const Vec2 p = contour->pts[i] - hm.origin();
      s << fmt_mm(p.x) << ',' << fmt_mm(p.y);
    }
    s << "\"/>\n";
  }
  const Vec2 tc = target.center - hm.origin();
  s << "<circle cx=\"" << fmt_mm(tc.x) << "\" cy=\"" << fmt_mm(tc.y) << "\" r=\""
    << fmt_mm(target.radius)
    << "\" fill=\"none\" stroke=\"#2a6f2a\" stroke-width=\"0.8\" "
       "stroke-dasharray=\"3,2\"/>\n";
  if (action) {
    const Vec2 a = action->start.xy() - hm.origin();
    const Vec2 b = action->end.xy() - hm.origin();
    s << "<line x1=\"" << fmt_mm(a.x) << "\" y1=\"" << fmt_mm(a.y) << "\" x2=\""
      << fmt_mm(b.x) << "\" y2=\"" << fmt_mm(b.y)
      << "\" stroke=\"#c0392b\" stroke-width=\"1.2\"/>\n";
    s << "<circle cx=\"" << fmt_mm(a.x) << "\" cy=\"" << fmt_mm(a.y)
      << "\" r=\"2\" fill=\"#c0392b\"/>\n";
  }
  char caption[128];
  std::snprintf(caption, sizeof caption, "iou %.4f  max_h %.1f mm  vol %.2f cm3",
                iou_value, hm.max_height() * 1000.0, hm.total_volume() * 1e6);
  s << "<text x=\"4\" y=\"" << h - 4.0
    << "\" font-family=\"monospace\" font-size=\"6\" fill=\"#333\">" << caption
    << "</text>\n";
  s << "</svg>\n";
  return s.str();
}

void save_svg(const std::string& svg, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) raise(ErrorCode::IoError, "cannot open for writing: " + path);
  f << svg;
  if (!f) raise(ErrorCode::IoError, "write failed: " + path);
}

}  // namespace dough
