#pragma once

#include <string>
#include <vector>

#include "kfc/cfk.hpp"

namespace kfc::cli {

/// Lattice placement of a complex for drawing: every generator is drawn at
/// one U-translate, chosen so that arrows inside a connected component start
/// and end on drawn dots whenever the component allows it.
struct Layout {
  struct Dot {
    std::string name;
    LatticePoint at;
  };
  struct Segment {
    LatticePoint from;
    LatticePoint to;
    /// False when the arrow ends on a translate that is not the drawn dot.
    bool ends_on_dot = true;
  };
  std::vector<Dot> dots;
  std::vector<Segment> segments;
};

Layout layout(const CfkComplex& c);

/// Text grid, rows labelled by j.
std::string render_ascii(const CfkComplex& c);

/// SVG with a 24-unit lattice pitch; point (i, j) maps to (24 i, -24 j).
std::string render_svg(const CfkComplex& c);

}  // namespace kfc::cli
