#pragma once

#include <span>
#include <string>
#include <string_view>

#include "latfree/functionals.hpp"
#include "latfree/geometry.hpp"
#include "latfree/inequalities.hpp"
#include "latfree/lattice.hpp"
#include "latfree/search.hpp"

namespace latfree {

// Polygon text format: {"vertices": [[x, y], ...]}, counter-clockwise on output;
// either orientation is accepted on input. Numbers are written in the shortest
// form that round-trips to the same double.

/// Throws ParseError naming the line (syntax) or field (schema) at fault, and
/// ParseError for vertex lists that do not form a convex polygon.
ConvexPolygon parse_polygon(std::string_view text);

std::string to_json(const ConvexPolygon& polygon);
std::string to_json(const FunctionalReport& report);
std::string to_json(const LatticeStatus& status);
std::string to_json(std::span<const InequalityResult> results);
std::string to_json(const SearchResult& result);
std::string to_json(const BatchReport& report);

/// Counterexample candidates as {"findings": [{source, id, value, bound, polygon}]}.
std::string findings_json(const SearchResult& result);
std::string findings_json(const BatchReport& report);

}  // namespace latfree
