#include "latfree/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "latfree/errors.hpp"

namespace latfree {

namespace {

const double kSqrt3 = std::sqrt(3.0);

std::vector<InequalityEntry> build_registry() {
  using R = const FunctionalReport&;
  constexpr auto kWeak = Relation::kWeak;
  constexpr auto kStrict = Relation::kStrict;
  constexpr auto kAll = Applicability::kAnyConvex;
  constexpr auto kFree = Applicability::kLatticeFree;
  constexpr auto kTheorem = EntryStatus::kTheorem;
  constexpr auto kCited = EntryStatus::kCited;
  constexpr auto kConjecture = EntryStatus::kConjecture;

  std::vector<InequalityEntry> r;
  r.push_back({"kubota", "sqrt3*D*(p-2D) <= 4A", kWeak, kAll, kCited, kWeakTolerance,
               [](R f) { return Sides{kSqrt3 * f.D() * (f.p() - 2 * f.D()), 4 * f.A()}; }});
  r.push_back({"scott_area", "A <= 1.144*D", kWeak, kFree, kCited, 1e-3,
               [](R f) { return Sides{f.A(), kScottAreaConstant * f.D()}; }});
  r.push_back({"crude_pD", "p-2D <= 2.65", kWeak, kFree, kCited, kWeakTolerance,
               [](R f) { return Sides{f.p() - 2 * f.D(), 2.65}; }});
  r.push_back({"conj_pD", "p-2D <= 1+2/sqrt3", kWeak, kFree, kConjecture, kWeakTolerance,
               [](R f) { return Sides{f.p() - 2 * f.D(), 1 + 2 / kSqrt3}; }});
  r.push_back({"conj_pR", "p-4R <= 2", kWeak, kFree, kConjecture, kWeakTolerance,
               [](R f) { return Sides{f.p() - 4 * f.R(), 2.0}; }});
  r.push_back({"thm1", "p-2D = p-4R <= 2", kWeak, Applicability::kLatticeFreeUnconditional,
               kTheorem, kWeakTolerance, [](R f) {
                 const double gap = std::abs(4 * f.R() - 2 * f.D()) / (2 * std::max(1.0, f.D()));
                 return Sides{f.p() - 4 * f.R(), 2.0, gap};
               }});
  r.push_back({"remark_r", "r <= 1/2 implies p-4R <= 2", kWeak,
               Applicability::kInradiusAtMostHalf, kTheorem, kWeakTolerance,
               [](R f) { return Sides{f.p() - 4 * f.R(), 2.0}; }});
  r.push_back({"ht_R", "p <= 4R+4r", kWeak, kAll, kCited, kWeakTolerance,
               [](R f) { return Sides{f.p(), 4 * f.R() + 4 * f.r()}; }});
  r.push_back({"ht_D", "p <= 2D+4r", kWeak, kAll, kCited, kWeakTolerance,
               [](R f) { return Sides{f.p(), 2 * f.D() + 4 * f.r()}; }});
  r.push_back({"thm2", "p-2D <= (2/sqrt3)(1+omega/D)", kWeak,
               Applicability::kLatticeFreeTriangle, kTheorem, kWeakTolerance, [](R f) {
                 return Sides{f.p() - 2 * f.D(), 2 / kSqrt3 * (1 + f.omega() / f.D())};
               }});
  r.push_back({"tri_wD", "omega <= (sqrt3/2)*D", kWeak, Applicability::kTriangle, kCited,
               kWeakTolerance, [](R f) { return Sides{f.omega(), kSqrt3 / 2 * f.D()}; }});
  r.push_back({"scott78", "(omega-1)(D-1) <= 1", kWeak, Applicability::kLatticeFreeTriangle,
               kCited, kWeakTolerance,
               [](R f) { return Sides{(f.omega() - 1) * (f.D() - 1), 1.0}; }});
  r.push_back({"as96", "(2r-1)(D-1) < 1", kStrict, kFree, kCited, 0.0,
               [](R f) { return Sides{(2 * f.r() - 1) * (f.D() - 1), 1.0}; }});
  r.push_back({"sa99", "(2r-1)(2R-1) < 1", kStrict, kFree, kCited, 0.0,
               [](R f) { return Sides{(2 * f.r() - 1) * (2 * f.R() - 1), 1.0}; }});
  r.push_back({"thm3i", "((D-1)/D)(p-2D) < 2", kStrict, kFree, kTheorem, 0.0,
               [](R f) { return Sides{(f.D() - 1) / f.D() * (f.p() - 2 * f.D()), 2.0}; }});
  r.push_back({"thm3ii", "((2R-1)/(2R))(p-4R) < 2", kStrict, kFree, kTheorem, 0.0, [](R f) {
                 return Sides{(2 * f.R() - 1) / (2 * f.R()) * (f.p() - 4 * f.R()), 2.0};
               }});
  r.push_back({"d_2R", "D <= 2R", kWeak, kAll, kCited, kWeakTolerance,
               [](R f) { return Sides{f.D(), 2 * f.R()}; }});
  return r;
}

}  // namespace

EvaluationContext EvaluationContext::of(const ConvexPolygon& polygon) {
  EvaluationContext context;
  context.functionals = report(polygon);
  context.lattice = is_lattice_free(polygon);
  context.unconditional = is_unconditional(polygon);
  context.vertex_count = polygon.size();
  return context;
}

const std::vector<InequalityEntry>& registry() {
  static const std::vector<InequalityEntry> entries = build_registry();
  return entries;
}

const InequalityEntry& entry(std::string_view id) {
  for (const InequalityEntry& e : registry()) {
    if (e.id == id) return e;
  }
  throw ParameterError("unknown inequality id: " + std::string(id));
}

bool applies(Applicability applicability, const EvaluationContext& context) {
  const bool triangle = context.vertex_count == 3;
  switch (applicability) {
    case Applicability::kAnyConvex:
      return true;
    case Applicability::kLatticeFree:
      return context.lattice.lattice_free;
    case Applicability::kLatticeFreeUnconditional:
      return context.lattice.lattice_free && context.unconditional.has_value();
    case Applicability::kInradiusAtMostHalf:
      return context.functionals.r() <= 0.5 + kGeomEps;
    case Applicability::kTriangle:
      return triangle;
    case Applicability::kLatticeFreeTriangle:
      return triangle && context.lattice.lattice_free;
  }
  return false;
}

InequalityResult evaluate(const InequalityEntry& e, const EvaluationContext& context) {
  InequalityResult result;
  result.id = e.id;
  result.status = e.status;
  result.relation = e.relation;
  result.applicable = applies(e.applicability, context);
  if (!result.applicable) return result;

  const Sides s = e.sides(context.functionals);
  result.lhs = s.lhs;
  result.rhs = s.rhs;
  result.slack = s.rhs - s.lhs;
  if (e.relation == Relation::kWeak) {
    result.holds = result.slack >= -e.tolerance && s.side_residual <= kGeomEps;
    result.near_boundary = std::abs(result.slack) <= e.tolerance;
  } else {
    result.holds = result.slack >= 0.0;
    result.tight = result.holds && result.slack <= kStrictTightBand;
  }
  return result;
}

InequalityResult evaluate(std::string_view id, const ConvexPolygon& polygon) {
  const InequalityEntry& e = entry(id);
  return evaluate(e, EvaluationContext::of(polygon));
}

std::vector<InequalityResult> evaluate_all(const EvaluationContext& context) {
  std::vector<InequalityResult> out;
  out.reserve(registry().size());
  for (const InequalityEntry& e : registry()) out.push_back(evaluate(e, context));
  return out;
}

std::vector<InequalityResult> evaluate_all(const ConvexPolygon& polygon) {
  return evaluate_all(EvaluationContext::of(polygon));
}

std::vector<Violation> violations(std::span<const InequalityResult> results,
                                  bool include_conjectures) {
  std::vector<Violation> out;
  for (const InequalityResult& r : results) {
    if (!r.applicable || r.holds) continue;
    const bool conjecture = r.status == EntryStatus::kConjecture;
    if (conjecture && !include_conjectures) continue;
    out.push_back({r.id, r.status, r.slack,
                   conjecture ? "counterexample candidate" : "violation"});
  }
  return out;
}

std::string_view to_string(EntryStatus status) {
  switch (status) {
    case EntryStatus::kTheorem:
      return "theorem";
    case EntryStatus::kCited:
      return "cited";
    case EntryStatus::kConjecture:
      return "conjecture";
  }
  return "unknown";
}

std::string_view to_string(Relation relation) {
  return relation == Relation::kWeak ? "<=" : "<";
}

}  // namespace latfree
