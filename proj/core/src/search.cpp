#include "latfree/search.hpp"

#include <algorithm>
#include <cmath>

#include "latfree/errors.hpp"
#include "latfree/functionals.hpp"
#include "latfree/random.hpp"

namespace latfree {

void SearchConfig::validate() const {
  if (iterations < 1) throw ParameterError("iterations must be >= 1");
  if (restarts < 1) throw ParameterError("restarts must be >= 1");
  if (family == Family::kFreePolygons && (vertices < 3 || vertices > 100)) {
    throw ParameterError("free polygons need 3 <= k <= 100");
  }
  if (!(initial_step > 0.0) || !(final_step > 0.0) || final_step > initial_step) {
    throw ParameterError("step radii must be positive and non-increasing");
  }
  if (!(initial_temperature > 0.0) || !(final_temperature > 0.0) ||
      final_temperature > initial_temperature) {
    throw ParameterError("temperatures must be positive and non-increasing");
  }
  if (!(margin >= 0.0)) throw ParameterError("margin must be non-negative");
}

double objective_value(Objective objective, const ConvexPolygon& polygon) {
  const double p = perimeter(polygon);
  if (objective == Objective::kPerimeterMinusTwoDiameters) {
    return p - 2.0 * diameter(polygon).value;
  }
  return p - 4.0 * circumradius(polygon);
}

double conjectured_bound(Objective objective) {
  return objective == Objective::kPerimeterMinusTwoDiameters ? 1.0 + 2.0 / std::sqrt(3.0) : 2.0;
}

LrGridResult grid_search_lr(int resolution, double r_min, double r_max) {
  if (resolution < 100) throw ParameterError("grid resolution must be >= 100");
  r_min = std::max(r_min, kMinAdmissibleRight);
  if (!(r_max >= r_min)) throw ParameterError("empty range for right");

  LrGridResult best{-INFINITY, {}, 0};
  const double steps = resolution - 1;
  for (int i = 0; i < resolution; ++i) {
    const double r = r_min + (r_max - r_min) * (i / steps);
    const double hi = r;
    const double lo = std::min(f_defect(r), hi);
    for (int j = 0; j < resolution; ++j) {
      const LrTriangleParams params{lo + (hi - lo) * (j / steps), r};
      const double value = lr_objective(params);
      ++best.evaluated;
      if (value > best.best_value) {
        best.best_value = value;
        best.argmax = params;
      }
    }
  }
  return best;
}

namespace {

double geometric(double from, double to, int step, int total) {
  if (total <= 1) return from;
  return from * std::pow(to / from, static_cast<double>(step) / (total - 1));
}

struct State {
  std::vector<Point> cloud;  // free polygons: hull(cloud) is the body
  LrTriangleParams params;   // lr triangles
  ConvexPolygon polygon;
  double value;
};

// Projects a candidate point cloud onto the lattice-free set: rescale about the
// incenter of its hull as far as possible. Returns nullopt for infeasible moves.
// Points swallowed by the hull come back as midpoints of the longest edges.
std::optional<State> fit_cloud(std::vector<Point> cloud, const SearchConfig& config) {
  try {
    const std::size_t k = cloud.size();
    const Point anchor = incircle(convex_hull(cloud)).center;
    const Point cell{std::floor(anchor.x), std::floor(anchor.y)};
    for (Point& p : cloud) p = p - cell;
    const ConvexPolygon hull = convex_hull(cloud);
    const ScaledPolygon fit =
        max_lattice_free_scale(hull, incircle(hull).center, config.margin, 1e4);

    cloud.assign(fit.polygon.vertices().begin(), fit.polygon.vertices().end());
    while (cloud.size() < k) {
      const std::size_t n = cloud.size();
      std::size_t longest = 0;
      for (std::size_t i = 1; i < n; ++i) {
        if (distance(cloud[i], cloud[(i + 1) % n]) >
            distance(cloud[longest], cloud[(longest + 1) % n])) {
          longest = i;
        }
      }
      const Point mid = 0.5 * (cloud[longest] + cloud[(longest + 1) % n]);
      cloud.insert(cloud.begin() + static_cast<std::ptrdiff_t>(longest + 1), mid);
    }
    const double value = objective_value(config.objective, fit.polygon);
    return State{std::move(cloud), {}, fit.polygon, value};
  } catch (const DegenerateError&) {
  } catch (const InfeasibleError&) {
  } catch (const ParameterError&) {
  }
  return std::nullopt;
}

std::optional<State> lr_state(const LrTriangleParams& params, const SearchConfig& config) {
  if (!params.admissible(0.0)) return std::nullopt;
  ConvexPolygon polygon = triangle_lr(params);
  if (has_interior_lattice_point(polygon, config.margin)) return std::nullopt;
  const double value = objective_value(config.objective, polygon);
  return State{{}, params, std::move(polygon), value};
}

State initial_state(const SearchConfig& config, Rng& rng, std::uint64_t seed) {
  if (config.family == Family::kLrTriangles) {
    for (;;) {
      const double r = rng.uniform(kMinAdmissibleRight, 3.0);
      const double l = rng.uniform(f_defect(r), r);
      if (auto s = lr_state({l, r}, config)) return *s;
    }
  }
  for (std::uint64_t attempt = 0;; ++attempt) {
    const ConvexPolygon start = random_lattice_free(seed * 7919 + attempt, config.vertices);
    std::vector<Point> cloud(start.vertices().begin(), start.vertices().end());
    const Point c = incircle(start).center;
    while (cloud.size() < static_cast<std::size_t>(config.vertices)) {
      const Point& v = cloud[rng.index(cloud.size())];
      cloud.push_back(c + rng.uniform(0.1, 0.9) * (v - c));
    }
    if (auto s = fit_cloud(std::move(cloud), config)) return *s;
  }
}

// A move frame: the edge attaining the width, or one of the lattice axes.
std::pair<Point, Point> move_frame(const ConvexPolygon& polygon, const Width& w, Rng& rng) {
  switch (rng.index(3)) {
    case 1:
      return {{1.0, 0.0}, {0.0, 1.0}};
    case 2:
      return {{0.0, 1.0}, {1.0, 0.0}};
    default: {
      const Point along = polygon.edge(w.edge) / norm(polygon.edge(w.edge));
      return {along, {-along.y, along.x}};
    }
  }
}

std::optional<State> propose(const State& current, const SearchConfig& config, double step,
                             Rng& rng) {
  if (config.family == Family::kLrTriangles) {
    LrTriangleParams next = current.params;
    (rng.index(2) == 0 ? next.left : next.right) += step * rng.normal();
    return lr_state(next, config);
  }
  std::vector<Point> cloud = current.cloud;
  const double d = diameter(current.polygon).value;
  const Width w = width(current.polygon);
  // Across the frame the radius is log-uniform between D and w^2/D.
  const double cross = d * std::pow(w.value / d, 2.0 * rng.uniform());
  const auto [along, across] = move_frame(current.polygon, w, rng);
  if (rng.index(2) == 0) {
    Point& v = cloud[rng.index(cloud.size())];
    v = v + step * (d * rng.normal()) * along + step * (cross * rng.normal()) * across;
  } else {
    const Point c = incircle(current.polygon).center;
    const double k = std::exp(10.0 * step * rng.normal());
    for (Point& p : cloud) p = p + (k - 1.0) * dot(p - c, along) * along;
  }
  const double shift_radius = 0.5 * step * std::min(1.0, cross);
  const Point shift{shift_radius * rng.normal(), shift_radius * rng.normal()};
  for (Point& p : cloud) p = p + shift;
  return fit_cloud(std::move(cloud), config);
}

}  // namespace

SearchResult anneal(const SearchConfig& config) {
  config.validate();
  std::optional<State> overall;
  std::size_t best_restart = 0;
  std::vector<RestartHistory> history;
  const int trace_every = std::max(1, config.iterations / 100);

  for (int restart = 0; restart < config.restarts; ++restart) {
    const std::uint64_t seed = config.seed + static_cast<std::uint64_t>(restart);
    Rng rng(seed);
    State current = initial_state(config, rng, seed);
    State best = current;
    RestartHistory h;
    h.seed = seed;

    for (int it = 0; it < config.iterations; ++it) {
      const double step = geometric(config.initial_step, config.final_step, it, config.iterations);
      const double temperature =
          geometric(config.initial_temperature, config.final_temperature, it, config.iterations);
      if (std::optional<State> next = propose(current, config, step, rng)) {
        const double delta = next->value - current.value;
        if (delta >= 0.0 || rng.uniform() < std::exp(delta / temperature)) {
          current = std::move(*next);
          ++h.accepted;
          if (current.value > best.value) best = current;
        }
      }
      if ((it + 1) % trace_every == 0) h.best_trace.push_back(best.value);
    }
    if (h.best_trace.empty() || h.best_trace.back() != best.value) {
      h.best_trace.push_back(best.value);
    }
    h.best_value = best.value;
    history.push_back(std::move(h));
    if (!overall || best.value > overall->value) {
      overall = std::move(best);
      best_restart = static_cast<std::size_t>(restart);
    }
  }

  const double bound = conjectured_bound(config.objective);
  const double gap = bound - overall->value;
  return SearchResult{config.objective,
                      config.family,
                      overall->value,
                      overall->polygon,
                      best_restart,
                      bound,
                      gap,
                      gap < -kCounterexampleThreshold,
                      std::move(history)};
}

std::vector<ConvexPolygon> batch_bodies(std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<ConvexPolygon> bodies;
  bodies.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t body_seed = static_cast<std::uint64_t>(rng.uniform() * 0x1.0p53);
    const int k = 3 + static_cast<int>(rng.index(6));
    bodies.push_back(random_lattice_free(body_seed, k));
  }
  return bodies;
}

BatchReport verify_bodies(std::span<const ConvexPolygon> bodies) {
  BatchReport out;
  out.bodies = bodies.size();
  for (const InequalityEntry& e : registry()) out.tallies.push_back({e.id});

  for (std::size_t i = 0; i < bodies.size(); ++i) {
    const EvaluationContext context = EvaluationContext::of(bodies[i]);
    if (context.lattice.lattice_free) {
      ++out.lattice_free_bodies;
      const FunctionalReport& f = context.functionals;
      out.max_p_minus_2d = std::max(out.max_p_minus_2d, f.p() - 2 * f.D());
      out.max_p_minus_4r = std::max(out.max_p_minus_4r, f.p() - 4 * f.R());
    }
    const std::vector<InequalityResult> results = evaluate_all(context);
    for (std::size_t k = 0; k < results.size(); ++k) {
      const InequalityResult& r = results[k];
      if (!r.applicable) continue;
      EntryTally& tally = out.tallies[k];
      ++tally.applicable;
      tally.min_slack = std::min(tally.min_slack, r.slack);
      if (r.holds) {
        ++tally.held;
      } else if (r.status == EntryStatus::kConjecture) {
        out.conjecture_findings.push_back({i, r.id, r.slack, bodies[i]});
      } else {
        out.violations.push_back({i, r.id, r.slack});
      }
    }
  }
  return out;
}

BatchReport verify_batch(std::size_t count, std::uint64_t seed) {
  if (count < 1) throw ParameterError("batch count must be >= 1");
  const std::vector<ConvexPolygon> bodies = batch_bodies(count, seed);
  return verify_bodies(bodies);
}

std::string_view to_string(Objective objective) {
  return objective == Objective::kPerimeterMinusTwoDiameters ? "pD" : "pR";
}

std::string_view to_string(Family family) {
  return family == Family::kLrTriangles ? "lr_triangles" : "free_polygons";
}

}  // namespace latfree
