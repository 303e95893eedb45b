#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "latfree/constructions.hpp"
#include "latfree/geometry.hpp"
#include "latfree/inequalities.hpp"
#include "latfree/lattice.hpp"

namespace latfree {

enum class Objective {
  kPerimeterMinusTwoDiameters,      // p - 2D
  kPerimeterMinusFourCircumradii,   // p - 4R
};

enum class Family { kLrTriangles, kFreePolygons };

struct SearchConfig {
  Objective objective = Objective::kPerimeterMinusTwoDiameters;
  Family family = Family::kFreePolygons;
  int vertices = 4;
  int iterations = 10000;
  int restarts = 32;
  std::uint64_t seed = 1;
  // Perturbation radius, relative to the current diameter for free polygons
  // and absolute for (left, right) parameters; decays geometrically. Free
  // polygons alternate one-vertex moves with stretches along a frame axis.
  double initial_step = 0.2;
  double final_step = 1e-3;
  double margin = kLatticeMargin;
  // Metropolis temperature schedule.
  double initial_temperature = 0.5;
  double final_temperature = 1e-4;

  /// Throws ParameterError on an invalid configuration.
  void validate() const;
};

struct RestartHistory {
  std::uint64_t seed = 0;
  double best_value = 0.0;
  int accepted = 0;
  // Best-so-far value sampled every iterations/100 steps, then at the end.
  std::vector<double> best_trace;
};

struct SearchResult {
  Objective objective;
  Family family;
  double best_value;
  ConvexPolygon best_polygon;
  std::size_t best_restart;
  double conjectured_bound;
  // conjectured_bound - best_value; negative flags a counterexample candidate.
  double gap;
  bool counterexample;
  std::vector<RestartHistory> history;
};

struct LrGridResult {
  double best_value;
  LrTriangleParams argmax;
  std::size_t evaluated;
};

struct BatchViolation {
  std::size_t body;
  std::string id;
  double slack;
};

struct BatchFinding {
  std::size_t body;
  std::string id;
  double slack;
  ConvexPolygon polygon;
};

struct EntryTally {
  std::string id;
  std::size_t applicable = 0;
  std::size_t held = 0;
  double min_slack = INFINITY;
};

struct BatchReport {
  std::size_t bodies = 0;
  std::size_t lattice_free_bodies = 0;
  std::vector<BatchViolation> violations;        // theorem and cited entries
  std::vector<BatchFinding> conjecture_findings;  // counterexample candidates
  double max_p_minus_2d = -INFINITY;             // over lattice-free bodies
  double max_p_minus_4r = -INFINITY;
  std::vector<EntryTally> tallies;                // registry order
};

inline constexpr double kCounterexampleThreshold = 1e-6;

double objective_value(Objective objective, const ConvexPolygon& polygon);

/// 1 + 2/sqrt(3) for p - 2D, 2 for p - 4R.
double conjectured_bound(Objective objective);

/// Dense grid of lr_objective over right in [r_min, r_max] and
/// left in [sqrt(right^2 + 1) - right, right], resolution points per axis.
LrGridResult grid_search_lr(int resolution, double r_min = kMinAdmissibleRight,
                            double r_max = 20.0);

/// Simulated annealing over lattice-free bodies; restarts use seed + index.
SearchResult anneal(const SearchConfig& config);

std::vector<ConvexPolygon> batch_bodies(std::size_t count, std::uint64_t seed);
BatchReport verify_bodies(std::span<const ConvexPolygon> bodies);
BatchReport verify_batch(std::size_t count, std::uint64_t seed);

std::string_view to_string(Objective objective);
std::string_view to_string(Family family);

}  // namespace latfree
