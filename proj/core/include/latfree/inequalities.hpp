#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "latfree/functionals.hpp"
#include "latfree/geometry.hpp"
#include "latfree/lattice.hpp"

namespace latfree {

enum class Relation { kWeak, kStrict };
enum class EntryStatus { kTheorem, kCited, kConjecture };

/// Class of bodies an entry is stated for.
enum class Applicability {
  kAnyConvex,
  kLatticeFree,
  kLatticeFreeUnconditional,
  kInradiusAtMostHalf,
  kTriangle,
  kLatticeFreeTriangle,
};

/// Everything an applicability predicate or evaluator may look at.
struct EvaluationContext {
  FunctionalReport functionals;
  LatticeStatus lattice;
  std::optional<UnconditionalityCertificate> unconditional;
  std::size_t vertex_count = 0;

  static EvaluationContext of(const ConvexPolygon& polygon);
};

struct Sides {
  double lhs;
  double rhs;
  // Extra residual that must also be within tolerance (thm1's p-2D = p-4R).
  double side_residual = 0.0;
};

struct InequalityEntry {
  std::string id;
  std::string description;
  Relation relation;
  Applicability applicability;
  EntryStatus status;
  // Allowed slack deficit for weak relations.
  double tolerance;
  std::function<Sides(const FunctionalReport&)> sides;
};

struct InequalityResult {
  std::string id;
  EntryStatus status = EntryStatus::kTheorem;
  Relation relation = Relation::kWeak;
  bool applicable = false;
  std::optional<double> lhs;
  std::optional<double> rhs;
  double slack = 0.0;
  bool holds = true;
  // Strict relation whose slack lies in [0, 1e-9].
  bool tight = false;
  // |slack| within the entry's tolerance band (approximate constants).
  bool near_boundary = false;
};

struct Violation {
  std::string id;
  EntryStatus status;
  double slack;
  // "violation" for theorem/cited entries, "counterexample candidate" for conjectures.
  std::string label;
};

inline constexpr double kWeakTolerance = 1e-9;
inline constexpr double kStrictTightBand = 1e-9;
/// Upper constant in A <= lambda * D for lattice-free bodies, known only approximately.
inline constexpr double kScottAreaConstant = 1.144;

/// All entries in fixed registry order.
const std::vector<InequalityEntry>& registry();
const InequalityEntry& entry(std::string_view id);

bool applies(Applicability applicability, const EvaluationContext& context);

/// Throws ParameterError for an unknown id.
InequalityResult evaluate(std::string_view id, const ConvexPolygon& polygon);
InequalityResult evaluate(const InequalityEntry& entry, const EvaluationContext& context);

std::vector<InequalityResult> evaluate_all(const ConvexPolygon& polygon);
std::vector<InequalityResult> evaluate_all(const EvaluationContext& context);

/// Failed applicable results; conjecture entries only when requested.
std::vector<Violation> violations(std::span<const InequalityResult> results,
                                  bool include_conjectures);

std::string_view to_string(EntryStatus status);
std::string_view to_string(Relation relation);

}  // namespace latfree
