#include "tangles/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace tangles {

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // drops the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  std::string s = buf;
  return s == "-0" ? "0" : s;
}

namespace {

const double kSqrt3 = std::sqrt(3.0);

struct Pt {
  double x = 0;
  double y = 0;
};

Pt to_pt(const VertexId& v, double denom) {
  return {(static_cast<double>(v.xa) + static_cast<double>(v.xb) * kSqrt3) / denom,
          (static_cast<double>(v.ya) + static_cast<double>(v.yb) * kSqrt3) / denom};
}

class Canvas {
 public:
  Canvas(const RenderOptions& opts) : opts_(opts) {}

  void include(Pt p, double pad) {
    lo_.x = std::min(lo_.x, p.x - pad);
    lo_.y = std::min(lo_.y, p.y - pad);
    hi_.x = std::max(hi_.x, p.x + pad);
    hi_.y = std::max(hi_.y, p.y + pad);
  }

  std::string x(double v) const { return format_number((v - lo_.x) * opts_.scale + opts_.margin); }
  std::string y(double v) const { return format_number((hi_.y - v) * opts_.scale + opts_.margin); }
  std::string len(double v) const { return format_number(v * opts_.scale); }
  std::string xy(Pt p) const { return x(p.x) + " " + y(p.y); }

  std::string header() const {
    const std::string w = format_number((hi_.x - lo_.x) * opts_.scale + 2 * opts_.margin);
    const std::string h = format_number((hi_.y - lo_.y) * opts_.scale + 2 * opts_.margin);
    return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           w + "\" height=\"" + h + "\" viewBox=\"0 0 " + w + " " + h + "\">\n";
  }

  bool empty() const { return lo_.x > hi_.x; }

 private:
  RenderOptions opts_;
  Pt lo_{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  Pt hi_{-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
};

void frame(Canvas& canvas, const Tangle* t, const DualPolyform* p) {
  if (t) {
    for (const auto& link : t->links) canvas.include(to_pt(link.center, 1.0), 1.0);
  }
  if (p) {
    for (const auto& c : p->cells) {
      for (const auto& v : cell_vertices(p->tiling, c)) canvas.include(to_pt(v, 1.0), 0.25);
    }
    for (const auto& [v, color] : p->coloring) canvas.include(to_pt(v, 1.0), 0.25);
  }
  if (canvas.empty()) canvas.include({0, 0}, 1.0);
}

std::string curve_path(const Canvas& canvas, const Tangle& t, const std::string& stroke, double width) {
  std::ostringstream out;
  out << "<path fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"" << format_number(width)
      << "\" stroke-linejoin=\"round\" d=\"";
  if (!t.links.empty()) {
    out << "M " << canvas.xy(to_pt(doubled_start(t.links.front()), 2.0));
    const std::string r = canvas.len(1.0);
    for (const auto& link : t.links) {
      // y is flipped, so counterclockwise arcs get sweep flag 1.
      const char sweep = link.curvature == Curvature::Convex ? '1' : '0';
      out << " A " << r << " " << r << " 0 0 " << sweep << " " << canvas.xy(to_pt(doubled_end(t.tiling, link), 2.0));
    }
    out << " Z";
  }
  out << "\"/>\n";
  return out.str();
}

std::string polyform_layer(const Canvas& canvas, const DualPolyform& p, const RenderOptions& opts) {
  std::ostringstream out;
  out << "<g fill=\"#e6e6e6\" stroke=\"#808080\" stroke-width=\"" << format_number(opts.edge_width) << "\">\n";
  for (const auto& c : p.cells) {
    out << "<polygon points=\"";
    bool first = true;
    for (const auto& v : cell_vertices(p.tiling, c)) {
      const Pt q = to_pt(v, 1.0);
      out << (first ? "" : " ") << canvas.x(q.x) << "," << canvas.y(q.y);
      first = false;
    }
    out << "\"/>\n";
  }
  out << "</g>\n";
  return out.str();
}

std::string coloring_layer(const Canvas& canvas, const DualPolyform& p, const RenderOptions& opts) {
  std::ostringstream out;
  const std::string r = canvas.len(0.12);
  out << "<g stroke=\"#000000\" stroke-width=\"" << format_number(opts.edge_width) << "\">\n";
  for (const auto& [v, color] : p.coloring) {
    const Pt q = to_pt(v, 1.0);
    out << "<circle cx=\"" << canvas.x(q.x) << "\" cy=\"" << canvas.y(q.y) << "\" r=\"" << r << "\" fill=\""
        << (color == Color::Black ? "#000000" : "#ffffff") << "\"/>\n";
  }
  out << "</g>\n";
  return out.str();
}

std::string dual_graph_layer(const Canvas& canvas, const DualPolyform& p, const RenderOptions& opts) {
  if (p.tiling != Tiling::Square) return {};
  const DualGraph g = to_dual_graph(p);
  std::ostringstream out;
  out << "<g stroke=\"#1f5fbf\" stroke-width=\"" << format_number(opts.edge_width * 2) << "\">\n";
  for (const auto& [a, b] : g.edges) {
    const Pt pa = to_pt(a, 1.0);
    const Pt pb = to_pt(b, 1.0);
    out << "<line x1=\"" << canvas.x(pa.x) << "\" y1=\"" << canvas.y(pa.y) << "\" x2=\"" << canvas.x(pb.x)
        << "\" y2=\"" << canvas.y(pb.y) << "\"/>\n";
  }
  out << "</g>\n";
  return out.str();
}

}  // namespace

std::string render_svg(const Tangle& t, const DualPolyform* p, const RenderOptions& opts) {
  Canvas canvas(opts);
  frame(canvas, &t, opts.show_polyform ? p : nullptr);
  std::string out = canvas.header();
  if (p && opts.show_polyform) {
    out += polyform_layer(canvas, *p, opts);
    if (opts.show_dual_graph) out += dual_graph_layer(canvas, *p, opts);
  }
  out += curve_path(canvas, t, "#000000", opts.curve_width);
  if (p && opts.show_polyform && opts.show_coloring) out += coloring_layer(canvas, *p, opts);
  out += "</svg>\n";
  return out;
}

std::string render_polyform_svg(const DualPolyform& p, const RenderOptions& opts, const ValidityReport* report) {
  Canvas canvas(opts);
  frame(canvas, nullptr, &p);
  std::string out = canvas.header();
  out += polyform_layer(canvas, p, opts);
  if (opts.show_dual_graph) out += dual_graph_layer(canvas, p, opts);
  if (opts.show_coloring) out += coloring_layer(canvas, p, opts);
  if (report && !report->no_white_cut.passed) {
    std::ostringstream ring;
    ring << "<g fill=\"none\" stroke=\"#d62728\" stroke-width=\"" << format_number(opts.edge_width * 2) << "\">\n";
    for (const auto& v : cut_vertices(p)) {
      if (p.color_of(v) != Color::White) continue;
      const Pt q = to_pt(v, 1.0);
      ring << "<circle cx=\"" << canvas.x(q.x) << "\" cy=\"" << canvas.y(q.y) << "\" r=\"" << canvas.len(0.3)
           << "\"/>\n";
    }
    ring << "</g>\n";
    out += ring.str();
  }
  out += "</svg>\n";
  return out;
}

std::string render_op_preview(const Tangle& before, const Tangle& after, const RenderOptions& opts) {
  Canvas canvas(opts);
  frame(canvas, &before, nullptr);
  frame(canvas, &after, nullptr);
  std::string out = canvas.header();
  out += curve_path(canvas, before, "#a0a0a0", opts.curve_width * 1.6);
  out += curve_path(canvas, after, "#000000", opts.curve_width);
  out += "</svg>\n";
  return out;
}

}  // namespace tangles
