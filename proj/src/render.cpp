#include "apollon/render.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "apollon/errors.hpp"
#include "apollon/frames.hpp"

namespace apollon {

namespace {

struct Mapper {
  Rat scale;   // pixels per geometry unit
  Rat margin;  // geometry offset placing the enclosing circle with 5% margin

  Rat x(const Rat& gx) const { return (gx + margin) * scale; }
  Rat y(const Rat& gy) const { return (margin - gy) * scale; }
  Rat length(const Rat& g) const { return g * scale; }
};

std::string dec(const Rat& v) { return to_decimal(v, 12); }

void emit_circle(std::ostringstream& out, const Mapper& map, const CircleSymbol& c) {
  const Rat r = Rat(1, abs(c.bend));
  out << "<circle cx=\"" << dec(map.x(c.center_x())) << "\" cy=\"" << dec(map.y(c.center_y()))
      << "\" r=\"" << dec(map.length(r)) << "\"/>\n";
}

void emit_label(std::ostringstream& out, const Mapper& map, const CircleSymbol& c,
                LabelMode mode) {
  const Rat r = Rat(1, abs(c.bend));
  Rat gx = c.center_x();
  Rat gy = c.center_y();
  Rat font = map.length(r) * Rat(4, 5);
  if (c.bend < 0) {
    // enclosing circle: label just inside the top rim, small
    gy += r * Rat(19, 20);
    font = map.length(r) * Rat(1, 20);
  }
  std::string text;
  if (mode == LabelMode::Bends) {
    text = c.bend.get_str();
  } else {
    text = "(" + c.x_dot.to_string() + "," + c.y_dot.to_string() + ")/" + c.bend.get_str();
    font = font * Rat(1, 4);
  }
  out << "<text x=\"" << dec(map.x(gx)) << "\" y=\"" << dec(map.y(gy)) << "\" font-size=\""
      << dec(font) << "\">" << text << "</text>\n";
}

void emit_frame(std::ostringstream& out, const Mapper& map, const GasketKey& key, long width_px) {
  const auto symbols = principal_symbols(key);
  const DescartesConfig root{{symbols[0], symbols[1], symbols[2], symbols[3]}};
  const Frame frame = frame_of(root);
  out << "<g stroke=\"#c02020\" stroke-width=\"1\" fill=\"none\">\n";
  for (size_t s = 0; s < kFrameSlots.size(); ++s) {
    const auto [i, j] = kFrameSlots[s];
    const CircleSymbol& a = root.at(i);
    const CircleSymbol& b = root.at(j);
    out << "<line x1=\"" << dec(map.x(a.center_x())) << "\" y1=\"" << dec(map.y(a.center_y()))
        << "\" x2=\"" << dec(map.x(b.center_x())) << "\" y2=\"" << dec(map.y(b.center_y()))
        << "\"/>\n";
  }
  out << "</g>\n<g fill=\"#c02020\" text-anchor=\"middle\" font-size=\""
      << dec(Rat(width_px, 72)) << "\">\n";
  for (size_t s = 0; s < kFrameSlots.size(); ++s) {
    const auto [i, j] = kFrameSlots[s];
    const CircleSymbol& a = root.at(i);
    const CircleSymbol& b = root.at(j);
    const Rat mx = (a.center_x() + b.center_x()) * Rat(1, 2);
    const Rat my = (a.center_y() + b.center_y()) * Rat(1, 2);
    const TriangleTriple& t = frame.triples[s];
    out << "<text x=\"" << dec(map.x(mx)) << "\" y=\"" << dec(map.y(my)) << "\">("
        << t.delta.to_string() << "," << t.gamma.to_string() << "," << t.h.get_str()
        << ")</text>\n";
  }
  out << "</g>\n";
}

}  // namespace

std::string render_svg(const Packing& packing, const RenderOptions& opts) {
  if (opts.width_px < 1) throw std::invalid_argument("width must be positive");
  if (opts.min_radius_px <= Rat(0)) throw std::invalid_argument("cull radius must be positive");
  if (packing.circles.empty()) throw EmptyPacking("nothing to render");
  if (packing.key.B < 1) throw std::invalid_argument("packing lacks an enclosing circle");

  // enclosing radius R = 1/B spans the view minus a 5% margin on each side
  const Int& B = packing.key.B;
  Mapper map{Rat(Int(10 * opts.width_px) * B, 21), Rat(21, 20 * B)};

  std::vector<CircleSymbol> circles = packing.circles;
  std::sort(circles.begin(), circles.end());
  std::vector<const CircleSymbol*> kept;
  for (const auto& c : circles) {
    if (map.length(Rat(1, abs(c.bend))) >= opts.min_radius_px) kept.push_back(&c);
  }

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << opts.width_px
      << "\" height=\"" << opts.width_px << "\" viewBox=\"0 0 " << opts.width_px << " "
      << opts.width_px << "\">\n";
  out << "<g fill=\"none\" stroke=\"#000000\" stroke-width=\"1\">\n";
  for (const auto* c : kept) emit_circle(out, map, *c);
  out << "</g>\n";
  if (opts.label_mode != LabelMode::None) {
    out << "<g fill=\"#000000\" text-anchor=\"middle\" dominant-baseline=\"middle\">\n";
    for (const auto* c : kept) emit_label(out, map, *c, opts.label_mode);
    out << "</g>\n";
  }
  if (opts.draw_frame) emit_frame(out, map, packing.key, opts.width_px);
  out << "</svg>\n";
  return out.str();
}

}  // namespace apollon
