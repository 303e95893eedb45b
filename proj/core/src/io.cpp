#include "latfree/io.hpp"

#include <string>
#include <vector>

#include <json.hpp>

#include "latfree/errors.hpp"

namespace latfree {

using nlohmann::json;

namespace {

json point_json(Point p) { return json::array({p.x, p.y}); }

json polygon_json(const ConvexPolygon& polygon) {
  json vertices = json::array();
  for (const Point& p : polygon.vertices()) vertices.push_back(point_json(p));
  return json{{"vertices", vertices}};
}

json points_json(const std::vector<Point>& points) {
  json out = json::array();
  for (const Point& p : points) out.push_back(point_json(p));
  return out;
}

std::size_t line_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

}  // namespace

ConvexPolygon parse_polygon(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("line " + std::to_string(line_of(text, e.byte)) + ": malformed JSON (" +
                     e.what() + ")");
  }
  if (!doc.is_object()) throw ParseError("top level: expected an object with key \"vertices\"");
  const auto it = doc.find("vertices");
  if (it == doc.end()) throw ParseError("field vertices: missing");
  if (!it->is_array()) throw ParseError("field vertices: expected an array of [x, y] pairs");

  std::vector<Point> pts;
  for (std::size_t i = 0; i < it->size(); ++i) {
    const json& v = (*it)[i];
    const std::string field = "field vertices[" + std::to_string(i) + "]";
    if (!v.is_array() || v.size() != 2) throw ParseError(field + ": expected [x, y]");
    for (std::size_t c = 0; c < 2; ++c) {
      if (!v[c].is_number()) {
        throw ParseError(field + "[" + std::to_string(c) + "]: expected a number");
      }
    }
    pts.push_back({v[0].get<double>(), v[1].get<double>()});
  }
  try {
    return ConvexPolygon(std::move(pts));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("field vertices: ") + e.what());
  }
}

std::string to_json(const ConvexPolygon& polygon) { return polygon_json(polygon).dump(); }

std::string to_json(const FunctionalReport& r) {
  json doc{{"p", r.p()},
           {"A", r.A()},
           {"D", r.D()},
           {"omega", r.omega()},
           {"R", r.R()},
           {"r", r.r()},
           {"diameter", {{"first", r.diameter.first}, {"second", r.diameter.second}}},
           {"width", {{"edge", r.width.edge}, {"vertex", r.width.vertex}}},
           {"circumcenter", point_json(r.circumcircle.center)},
           {"incenter", point_json(r.incircle.center)}};
  return doc.dump(2);
}

std::string to_json(const LatticeStatus& s) {
  json doc{{"lattice_free", s.lattice_free},
           {"margin", s.margin},
           {"interior_points", points_json(s.interior_points)},
           {"boundary_points", points_json(s.boundary_points)}};
  return doc.dump(2);
}

std::string to_json(std::span<const InequalityResult> results) {
  json doc = json::array();
  for (const InequalityResult& r : results) {
    doc.push_back({{"id", r.id},
                   {"applicable", r.applicable},
                   {"lhs", r.lhs ? json(*r.lhs) : json(nullptr)},
                   {"rhs", r.rhs ? json(*r.rhs) : json(nullptr)},
                   {"slack", r.applicable ? json(r.slack) : json(nullptr)},
                   {"holds", r.holds},
                   {"status", std::string(to_string(r.status))}});
  }
  return doc.dump(2);
}

std::string to_json(const SearchResult& result) {
  json restarts = json::array();
  for (const RestartHistory& h : result.history) {
    restarts.push_back({{"seed", h.seed},
                        {"best_value", h.best_value},
                        {"accepted", h.accepted},
                        {"best_trace", h.best_trace}});
  }
  json doc{{"objective", std::string(to_string(result.objective))},
           {"family", std::string(to_string(result.family))},
           {"best_value", result.best_value},
           {"conjectured_bound", result.conjectured_bound},
           {"gap", result.gap},
           {"counterexample", result.counterexample},
           {"best_restart", result.best_restart},
           {"best_polygon", polygon_json(result.best_polygon)},
           {"restarts", restarts}};
  return doc.dump(2);
}

std::string to_json(const BatchReport& report) {
  json violations = json::array();
  for (const BatchViolation& v : report.violations) {
    violations.push_back({{"body", v.body}, {"id", v.id}, {"slack", v.slack}});
  }
  json tallies = json::array();
  for (const EntryTally& t : report.tallies) {
    tallies.push_back({{"id", t.id},
                       {"applicable", t.applicable},
                       {"held", t.held},
                       {"min_slack", t.applicable ? json(t.min_slack) : json(nullptr)}});
  }
  json doc{{"bodies", report.bodies},
           {"lattice_free_bodies", report.lattice_free_bodies},
           {"violations", violations},
           {"conjecture_findings", report.conjecture_findings.size()},
           {"max_p_minus_2D", report.lattice_free_bodies ? json(report.max_p_minus_2d) : json(nullptr)},
           {"max_p_minus_4R", report.lattice_free_bodies ? json(report.max_p_minus_4r) : json(nullptr)},
           {"tallies", tallies}};
  return doc.dump(2);
}

std::string findings_json(const SearchResult& result) {
  json findings = json::array();
  if (result.counterexample) {
    findings.push_back({{"source", "search"},
                        {"id", result.objective == Objective::kPerimeterMinusTwoDiameters
                                   ? "conj_pD"
                                   : "conj_pR"},
                        {"value", result.best_value},
                        {"bound", result.conjectured_bound},
                        {"polygon", polygon_json(result.best_polygon)}});
  }
  return json{{"findings", findings}}.dump(2);
}

std::string findings_json(const BatchReport& report) {
  json findings = json::array();
  for (const BatchFinding& f : report.conjecture_findings) {
    findings.push_back({{"source", "verify"},
                        {"body", f.body},
                        {"id", f.id},
                        {"slack", f.slack},
                        {"polygon", polygon_json(f.polygon)}});
  }
  return json{{"findings", findings}}.dump(2);
}

}  // namespace latfree
