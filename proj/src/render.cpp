#include "mgm/render.hpp"

#include <array>
#include <sstream>

namespace mgm {

namespace {

using Glyph = std::array<const char*, 3>;

constexpr std::array<Glyph, Tile::kCount> kGlyphs{{
    {"   ", "   ", "   "},
    {"   ", "-. ", " | "},
    {"   ", " .-", " | "},
    {" | ", " '-", "   "},
    {" | ", "-' ", "   "},
    {"   ", "---", "   "},
    {" | ", " | ", " | "},
    {" | ", "-/-", " | "},
    {" | ", "-\\-", " | "},
    {" | ", "-|-", " | "},
    {" | ", "---", " | "},
    {" | ", "-=-", " | "},
    {" | ", "-I-", " | "},
}};

// Edge midpoints of a 40x40 tile.
const char* mid(Edge e) {
  switch (e) {
    case Edge::T: return "20 0";
    case Edge::R: return "40 20";
    case Edge::B: return "20 40";
    case Edge::L: return "0 20";
  }
  return "";
}

void curve(std::ostream& out, Edge a, Edge b) {
  out << "<path d=\"M " << mid(a) << " Q 20 20 " << mid(b) << "\"/>";
}

}  // namespace

std::string render_ascii(const Mosaic& m) {
  std::string out;
  for (int i = 0; i < m.rows(); ++i) {
    for (int line = 0; line < 3; ++line) {
      for (int j = 0; j < m.cols(); ++j) out += kGlyphs[m.at(i, j).code()][line];
      out += '\n';
    }
  }
  return out;
}

std::string render_svg(const Mosaic& m) {
  std::ostringstream out;
  const int w = 40 * m.cols(), h = 40 * m.rows();
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
      << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
  out << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
  out << "<g fill=\"none\" stroke=\"black\" stroke-width=\"3\">\n";
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      const int code = m.at(i, j).code();
      out << "<g transform=\"translate(" << 40 * j << " " << 40 * i << ")\" data-tile=\"" << code
          << "\">";
      using enum Edge;
      switch (code) {
        case 0: break;
        case 1: curve(out, L, B); break;
        case 2: curve(out, B, R); break;
        case 3: curve(out, R, T); break;
        case 4: curve(out, T, L); break;
        case 5: out << "<path d=\"M 0 20 H 40\"/>"; break;
        case 6: out << "<path d=\"M 20 0 V 40\"/>"; break;
        case 7: curve(out, T, L); curve(out, B, R); break;
        case 8: curve(out, T, R); curve(out, B, L); break;
        case 9: out << "<path d=\"M 20 0 V 40\"/><path d=\"M 0 20 H 13 M 27 20 H 40\"/>"; break;
        case 10: out << "<path d=\"M 0 20 H 40\"/><path d=\"M 20 0 V 13 M 20 27 V 40\"/>"; break;
        case 11:
        case 12:
          out << "<path d=\"M 20 0 V 40 M 0 20 H 40\"/>";
          out << (code == 11 ? "<path d=\"M 11 20 H 29\"" : "<path d=\"M 20 11 V 29\"")
              << " stroke=\"red\" stroke-width=\"7\"/>";
          break;
      }
      out << "</g>\n";
    }
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace mgm
