#include "bcr/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace bcr {

SvgStyle framework_style(const FrameworkGraph& fg) {
  SvgStyle s;
  for (int e = 0; e < fg.graph.m(); ++e) {
    switch (fg.cons[fg.edge_con[e]].color) {
      case Color::Red: s.edge_color.push_back("#d62728"); break;
      case Color::Blue: s.edge_color.push_back("#1f77b4"); break;
      case Color::Yellow: s.edge_color.push_back("#e6b800"); break;
      case Color::Gray: s.edge_color.push_back("#8c8c8c"); break;
    }
  }
  return s;
}

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string to_svg(const Drawing& d, const SvgStyle& style) {
  const double size = 800.0, margin = 20.0;
  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  bool any = false;
  auto grow = [&](const Point& p) {
    double x = to_double(p.x), y = to_double(p.y);
    if (!any) {
      x0 = x1 = x;
      y0 = y1 = y;
      any = true;
    }
    x0 = std::min(x0, x), x1 = std::max(x1, x), y0 = std::min(y0, y), y1 = std::max(y1, y);
  };
  for (const auto& p : d.pos) grow(p);
  for (const auto& c : d.curve)
    for (const auto& p : c) grow(p);
  double span = std::max({x1 - x0, y1 - y0, 1e-9});
  double scale = (size - 2 * margin) / span;
  auto X = [&](const Point& p) { return num(margin + (to_double(p.x) - x0) * scale); };
  auto Y = [&](const Point& p) { return num(margin + (y1 - to_double(p.y)) * scale); };
  double w = any ? (x1 - x0) * scale + 2 * margin : 100, h = any ? (y1 - y0) * scale + 2 * margin : 100;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(w) << "\" height=\"" << num(h)
      << "\" viewBox=\"0 0 " << num(w) << " " << num(h) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<g fill=\"none\" stroke-width=\"1\">\n";
  for (int e = 0; e < d.graph.m(); ++e) {
    const auto& c = d.curve[e];
    std::string color = e < static_cast<int>(style.edge_color.size()) ? style.edge_color[e] : "black";
    out << "<path d=\"";
    for (size_t i = 0; i < c.size(); ++i) out << (i ? " L" : "M") << X(c[i]) << " " << Y(c[i]);
    out << "\" stroke=\"" << color << "\"/>\n";
  }
  out << "</g>\n";
  if (style.crossings) {
    out << "<g fill=\"#ff7f0e\">\n";
    for (const auto& x : style.crossings->crossings)
      out << "<rect class=\"crossing\" x=\"" << num(std::stod(X(x.p)) - 2) << "\" y=\"" << num(std::stod(Y(x.p)) - 2)
          << "\" width=\"4\" height=\"4\"/>\n";
    out << "</g>\n";
  }
  out << "<g fill=\"black\">\n";
  for (int v = 0; v < d.graph.n(); ++v)
    out << "<circle cx=\"" << X(d.pos[v]) << "\" cy=\"" << Y(d.pos[v]) << "\" r=\"2\"><title>" << escape(d.graph.id(v))
        << "</title></circle>\n";
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace bcr
