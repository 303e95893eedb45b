#pragma once

#include <optional>
#include <string>

#include "latfree/constructions.hpp"
#include "latfree/geometry.hpp"

namespace latfree::cli {

struct FigureOptions {
  bool lattice = false;
  bool circles = false;
  // Rhombus, square and labeled segments of a Q/Q' instance; the polygon itself
  // is then usually the intersection.
  std::optional<QQPrimeInstance> overlay;
};

/// Deterministic SVG. The viewport is the bounding box of everything drawn plus a
/// 10% margin, with y pointing up.
std::string emit_figure(const ConvexPolygon& polygon, const FigureOptions& options = {});

}  // namespace latfree::cli
