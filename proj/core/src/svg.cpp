#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "tlfc/diagram.hpp"

namespace tlfc {

namespace {

constexpr int kSpacing = 40;
constexpr int kMargin = 30;
constexpr int kHeight = 140;

int x_of(int index) { return kMargin + (index - 1) * kSpacing; }

std::string escape(std::string_view text) {
  std::string out;
  for (char c : text) {
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

std::string render_svg(const Diagram& d, std::string_view caption) {
  const int k = d.strings();
  const int width = 2 * kMargin + (k - 1) * kSpacing;
  const int top = kMargin;
  const int bottom = kMargin + kHeight;
  const int height = bottom + kMargin + (caption.empty() ? 0 : 20);

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height
      << "\">\n";
  svg << "  <g fill=\"none\" stroke=\"black\" stroke-width=\"2\">\n";
  for (const Arrow& a : d.arrows()) {
    const int x1 = x_of(a.tail.index);
    const int x2 = x_of(a.head.index);
    if (a.tail.row == a.head.row) {
      // Bubble bulging into the rectangle; wider spans reach deeper.
      const int y = a.tail.row == Row::Top ? top : bottom;
      const int span = std::abs(a.head.index - a.tail.index);
      const int depth = std::min(kHeight / 2 - 10, 15 + 12 * span);
      const int cy = a.tail.row == Row::Top ? y + depth : y - depth;
      svg << "    <path d=\"M " << x1 << ' ' << y << " C " << x1 << ' ' << cy << ", "
          << x2 << ' ' << cy << ", " << x2 << ' ' << y << "\"/>\n";
    } else {
      const int mid = (top + bottom) / 2;
      svg << "    <path d=\"M " << x1 << ' ' << top << " C " << x1 << ' ' << mid << ", "
          << x2 << ' ' << mid << ", " << x2 << ' ' << bottom << "\"/>\n";
    }
  }
  svg << "  </g>\n  <g fill=\"black\">\n";
  for (int x = 1; x <= k; ++x) {
    svg << "    <circle cx=\"" << x_of(x) << "\" cy=\"" << top << "\" r=\"4\"/>\n";
    svg << "    <circle cx=\"" << x_of(x) << "\" cy=\"" << bottom << "\" r=\"4\"/>\n";
  }
  svg << "  </g>\n";
  if (!caption.empty()) {
    svg << "  <text x=\"" << kMargin << "\" y=\"" << bottom + kMargin + 10
        << "\" font-family=\"monospace\" font-size=\"12\">" << escape(caption)
        << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace tlfc
