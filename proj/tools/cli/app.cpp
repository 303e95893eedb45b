#include "app.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "figure.hpp"
#include "latfree/constructions.hpp"
#include "latfree/errors.hpp"
#include "latfree/functionals.hpp"
#include "latfree/inequalities.hpp"
#include "latfree/io.hpp"
#include "latfree/lattice.hpp"
#include "latfree/search.hpp"

namespace latfree::cli {

namespace {

constexpr const char* kDefaultFindings = "latfree_findings.json";

std::string num(double v) {
  if (v == 0.0) v = 0.0;
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_all(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ConvexPolygon load_polygon(const std::string& file, std::istream& in) {
  if (file.empty()) return parse_polygon(read_all(in));
  std::ifstream f(file);
  if (!f) throw InputError("cannot read " + file);
  try {
    return parse_polygon(read_all(f));
  } catch (const ParseError& e) {
    throw ParseError(file + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_file(path, text);
  }
}

std::uint64_t resolve_seed(const CLI::Option* flag, std::uint64_t given, std::uint64_t fallback) {
  if (flag->count() > 0) return given;
  if (const char* env = std::getenv("LATFREE_SEED")) {
    std::uint64_t seed = 0;
    const std::string_view text(env);
    const auto res = std::from_chars(text.data(), text.data() + text.size(), seed);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
      throw InputError("LATFREE_SEED must be a non-negative integer, got \"" + std::string(env) +
                       "\"");
    }
    return seed;
  }
  return fallback;
}

// Writes the findings file when asked for, or when there is something to report.
void persist_findings(const std::string& requested, bool any, const std::string& json,
                      std::ostream& out) {
  if (requested.empty() && !any) return;
  const std::string path = requested.empty() ? kDefaultFindings : requested;
  write_file(path, json);
  out << "findings written to " << path << "\n";
}

int cmd_functionals(const ConvexPolygon& p, bool as_json, std::ostream& out) {
  const FunctionalReport r = report(p);
  if (as_json) {
    out << to_json(r) << "\n";
    return kExitOk;
  }
  out << "p      " << num(r.p()) << "\n"
      << "A      " << num(r.A()) << "\n"
      << "D      " << num(r.D()) << "\n"
      << "omega  " << num(r.omega()) << "\n"
      << "R      " << num(r.R()) << "\n"
      << "r      " << num(r.r()) << "\n";
  return kExitOk;
}

std::vector<std::string> split_ids(const std::string& list) {
  std::vector<std::string> ids;
  std::stringstream ss(list);
  for (std::string id; std::getline(ss, id, ',');) {
    if (!id.empty()) ids.push_back(id);
  }
  return ids;
}

int cmd_check(const ConvexPolygon& p, const std::string& which, bool as_json, std::ostream& out) {
  const EvaluationContext ctx = EvaluationContext::of(p);
  std::vector<InequalityResult> results;
  if (which == "all") {
    results = evaluate_all(ctx);
  } else {
    for (const std::string& id : split_ids(which)) results.push_back(evaluate(entry(id), ctx));
    if (results.empty()) throw InputError("--ineq: no inequality ids given");
  }

  if (as_json) {
    out << to_json(results) << "\n";
  } else {
    out << std::left << std::setw(12) << "id" << std::setw(12) << "status" << std::setw(4)
        << "rel" << std::setw(24) << "lhs" << std::setw(24) << "rhs" << std::setw(24) << "slack"
        << "result\n";
    for (const InequalityResult& r : results) {
      std::string verdict;
      if (!r.applicable) {
        verdict = "n/a";
      } else if (r.holds) {
        verdict = r.tight ? "holds (tight)" : r.near_boundary ? "holds (near boundary)" : "holds";
      } else {
        verdict = r.status == EntryStatus::kConjecture ? "counterexample candidate" : "violation";
      }
      out << std::setw(12) << r.id << std::setw(12) << to_string(r.status) << std::setw(4)
          << to_string(r.relation) << std::setw(24) << (r.lhs ? num(*r.lhs) : "-")
          << std::setw(24) << (r.rhs ? num(*r.rhs) : "-") << std::setw(24)
          << (r.applicable ? num(r.slack) : "-") << verdict << "\n";
    }
  }
  return violations(results, true).empty() ? kExitOk : kExitFinding;
}

int cmd_lattice(const ConvexPolygon& p, double margin, bool as_json, std::ostream& out) {
  const LatticeStatus s = is_lattice_free(p, margin);
  if (as_json) {
    out << to_json(s) << "\n";
    return kExitOk;
  }
  auto list = [&](const std::vector<Point>& pts) {
    std::string text;
    for (const Point& q : pts) text += " (" + num(q.x) + "," + num(q.y) + ")";
    return text.empty() ? std::string(" none") : text;
  };
  out << "lattice_free     " << (s.lattice_free ? "true" : "false") << "\n"
      << "margin           " << num(s.margin) << "\n"
      << "interior points " << list(s.interior_points) << "\n"
      << "boundary points " << list(s.boundary_points) << "\n";
  if (const auto cert = is_unconditional(p)) {
    out << "unconditional    true, center (" << num(cert->center.x) << "," << num(cert->center.y)
        << ")\n";
  } else {
    out << "unconditional    false\n";
  }
  return kExitOk;
}

std::string describe(const SearchResult& r, int vertices) {
  std::ostringstream out;
  out << "objective      " << to_string(r.objective)
      << (r.objective == Objective::kPerimeterMinusTwoDiameters ? " (p - 2D)" : " (p - 4R)")
      << "\n"
      << "family         " << to_string(r.family);
  if (r.family == Family::kFreePolygons) out << " (k = " << vertices << ")";
  out << "\n"
      << "best value     " << num(r.best_value) << "\n"
      << "conjectured    " << num(r.conjectured_bound) << "\n"
      << "gap            " << num(r.gap) << "\n"
      << "status         "
      << (r.counterexample ? "counterexample candidate, exceeds the conjectured bound"
                           : "approaching the conjectured bound from below")
      << "\n"
      << "best restart   " << r.best_restart << " (seed " << r.history[r.best_restart].seed
      << ")\n";
  for (const RestartHistory& h : r.history) {
    out << "  restart seed " << h.seed << ": best " << num(h.best_value) << ", accepted "
        << h.accepted << "\n";
  }
  out << "best polygon   " << to_json(r.best_polygon) << "\n";
  return out.str();
}

std::string describe(const BatchReport& r) {
  std::ostringstream out;
  out << "bodies               " << r.bodies << "\n"
      << "lattice-free bodies  " << r.lattice_free_bodies << "\n"
      << "max p - 2D           " << num(r.max_p_minus_2d) << " (conjectured bound "
      << num(conjectured_bound(Objective::kPerimeterMinusTwoDiameters)) << ")\n"
      << "max p - 4R           " << num(r.max_p_minus_4r) << " (conjectured bound "
      << num(conjectured_bound(Objective::kPerimeterMinusFourCircumradii)) << ")\n"
      << "violations           " << r.violations.size() << "\n"
      << "conjecture findings  " << r.conjecture_findings.size() << "\n\n"
      << std::left << std::setw(12) << "id" << std::setw(12) << "applicable" << std::setw(10)
      << "held" << "min slack\n";
  for (const EntryTally& t : r.tallies) {
    out << std::setw(12) << t.id << std::setw(12) << t.applicable << std::setw(10) << t.held
        << (t.applicable > 0 ? num(t.min_slack) : "-") << "\n";
  }
  for (const BatchViolation& v : r.violations) {
    out << "violation: body " << v.body << " " << v.id << " slack " << num(v.slack) << "\n";
  }
  for (const BatchFinding& f : r.conjecture_findings) {
    out << "counterexample candidate: body " << f.body << " " << f.id << " slack "
        << num(f.slack) << "\n";
  }
  return out.str();
}

int cmd_lemma_demo(double slope, double rprime, const std::string& svg, std::ostream& out) {
  const QQPrimeInstance q = q_qprime(slope, rprime);
  const AbcLemma lemma = abc_lemma(q.big_a, q.big_b, q.big_b_prime);
  const double bound = q.rectangle_perimeter;
  out << "slope " << num(slope) << ", R' " << num(rprime) << "\n"
      << "M = (" << num(q.m.x) << ", " << num(q.m.y) << "), N = (" << num(q.n.x) << ", "
      << num(q.n.y) << ")\n"
      << "a  " << num(q.a) << "\nA  " << num(q.big_a) << "\nB' " << num(q.big_b_prime)
      << "\nb  " << num(q.b) << "\nB  " << num(q.big_b) << "\nC  " << num(q.big_c) << "\n"
      << "a/A - b/B          " << num(q.a / q.big_a - q.b / q.big_b) << "\n"
      << "a^2 - A^2 - B'^2   " << num(q.a * q.a - q.big_a * q.big_a - q.big_b_prime * q.big_b_prime)
      << "\n"
      << "b^2 - B^2 - C^2    " << num(q.b * q.b - q.big_b * q.big_b - q.big_c * q.big_c) << "\n"
      << "C/B - B'/A         " << num(q.big_c / q.big_b - q.big_b_prime / q.big_a) << "\n"
      << "a + b = " << num(q.a + q.b) << " <= A + B + C = " << num(q.big_a + q.big_b + q.big_c)
      << (lemma.holds ? "  holds" : "  FAILS") << "\n"
      << "p(Q n Q') = " << num(q.intersection_perimeter) << " <= 4R' + 2 = " << num(bound)
      << (q.intersection_perimeter <= bound + kWeakTolerance ? "  holds" : "  FAILS") << "\n";
  if (!svg.empty()) {
    FigureOptions options;
    options.lattice = true;
    options.overlay = q;
    write_file(svg, emit_figure(q.intersection, options));
  }
  const bool ok = lemma.holds && lemma.original_form == lemma.final_form &&
                  q.intersection_perimeter <= bound + kWeakTolerance;
  return ok ? kExitOk : kExitFinding;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Functionals, inequalities and searches for lattice-free convex polygons",
               "latfree"};
  app.require_subcommand(1);

  std::string file;
  bool as_json = false;
  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("--file", file, "polygon file (reads stdin when omitted)");
  };

  auto* functionals = app.add_subcommand("functionals", "perimeter, area, diameter, width, R, r");
  add_input(functionals);
  functionals->add_flag("--json", as_json, "JSON output");

  std::string ineq = "all";
  auto* check = app.add_subcommand("check", "evaluate registry inequalities");
  add_input(check);
  check->add_option("--ineq", ineq, "\"all\" or a comma-separated list of ids");
  check->add_flag("--json", as_json, "JSON output");

  double margin = kLatticeMargin;
  auto* lattice = app.add_subcommand("lattice", "lattice points and lattice-freeness");
  add_input(lattice);
  lattice->add_option("--margin", margin, "containment margin")->check(CLI::NonNegativeNumber);
  lattice->add_flag("--json", as_json, "JSON output");

  std::string kind;
  int n = 1;
  double left = 0.0;
  double right = 0.0;
  std::uint64_t family_seed = 1;
  int k = 4;
  std::string out_path;
  auto* family = app.add_subcommand("family", "emit a polygon from a named family");
  family->add_option("--kind", kind, "extremizer | kn | lr | random")
      ->required()
      ->check(CLI::IsMember({"extremizer", "kn", "lr", "random"}));
  family->add_option("--n", n, "K_n index")->check(CLI::PositiveNumber);
  family->add_option("--left", left, "lr triangle left parameter");
  family->add_option("--right", right, "lr triangle right parameter");
  family->add_option("--seed", family_seed, "random body seed");
  family->add_option("--k", k, "random body point count")->check(CLI::Range(3, 100));
  family->add_option("--out", out_path, "write to file instead of stdout");

  std::string objective = "pD";
  std::string search_family = "free_polygons";
  SearchConfig config;
  std::uint64_t seed = 1;
  std::string findings;
  auto* search = app.add_subcommand("search", "simulated annealing over lattice-free bodies");
  search->add_option("--objective", objective, "pD (p - 2D) | pR (p - 4R)")
      ->check(CLI::IsMember({"pD", "pR"}));
  search->add_option("--family", search_family, "lr_triangles | free_polygons")
      ->check(CLI::IsMember({"lr_triangles", "free_polygons"}));
  search->add_option("--k", config.vertices, "vertices for free polygons");
  search->add_option("--iterations", config.iterations, "iterations per restart");
  search->add_option("--restarts", config.restarts, "independent restarts");
  auto* search_seed = search->add_option("--seed", seed, "base seed (default: LATFREE_SEED or 1)");
  search->add_option("--findings", findings, "counterexample findings file");
  search->add_option("--out", out_path, "write the best polygon to this file");
  search->add_flag("--json", as_json, "JSON output");

  std::size_t count = 1000;
  auto* verify = app.add_subcommand("verify", "evaluate the registry over random lattice-free bodies");
  verify->add_option("--count", count, "number of bodies")->check(CLI::PositiveNumber);
  auto* verify_seed = verify->add_option("--seed", seed, "batch seed (default: LATFREE_SEED or 1)");
  verify->add_option("--findings", findings, "counterexample findings file");
  verify->add_flag("--json", as_json, "JSON output");

  bool show_lattice = false;
  bool show_circles = false;
  auto* figure = app.add_subcommand("figure", "SVG drawing of a polygon");
  add_input(figure);
  figure->add_flag("--lattice", show_lattice, "draw lattice points");
  figure->add_flag("--circles", show_circles, "draw circumcircle and incircle");
  figure->add_option("--out", out_path, "write to file instead of stdout");

  double slope = -1.0;
  double rprime = 1.0;
  auto* lemma = app.add_subcommand("lemma-demo", "Q/Q' perimeter bound for a supporting line");
  lemma->add_option("--slope", slope, "slope of L (negative)");
  lemma->add_option("--rprime", rprime, "circumradius R' of the normalized body");
  lemma->add_option("--out", out_path, "also write an SVG overlay to this file");

  std::vector<const char*> argv{"latfree"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (functionals->parsed()) return cmd_functionals(load_polygon(file, in), as_json, out);
    if (check->parsed()) return cmd_check(load_polygon(file, in), ineq, as_json, out);
    if (lattice->parsed()) return cmd_lattice(load_polygon(file, in), margin, as_json, out);

    if (family->parsed()) {
      ConvexPolygon p = equilateral_extremizer();
      if (kind == "kn") p = kn_family(n);
      if (kind == "lr") p = triangle_lr({left, right});
      if (kind == "random") p = random_lattice_free(family_seed, k);
      emit(out_path, to_json(p) + "\n", out);
      return kExitOk;
    }

    if (search->parsed()) {
      config.objective = objective == "pD" ? Objective::kPerimeterMinusTwoDiameters
                                           : Objective::kPerimeterMinusFourCircumradii;
      config.family = search_family == "lr_triangles" ? Family::kLrTriangles : Family::kFreePolygons;
      config.seed = resolve_seed(search_seed, seed, 1);
      const SearchResult r = anneal(config);
      out << (as_json ? to_json(r) + "\n" : describe(r, config.vertices));
      if (!out_path.empty()) write_file(out_path, to_json(r.best_polygon) + "\n");
      persist_findings(findings, r.counterexample, findings_json(r), out);
      return r.counterexample ? kExitFinding : kExitOk;
    }

    if (verify->parsed()) {
      const BatchReport r = verify_batch(count, resolve_seed(verify_seed, seed, 1));
      out << (as_json ? to_json(r) + "\n" : describe(r));
      persist_findings(findings, !r.conjecture_findings.empty(), findings_json(r), out);
      return r.violations.empty() && r.conjecture_findings.empty() ? kExitOk : kExitFinding;
    }

    if (figure->parsed()) {
      FigureOptions options;
      options.lattice = show_lattice;
      options.circles = show_circles;
      emit(out_path, emit_figure(load_polygon(file, in), options), out);
      return kExitOk;
    }

    if (lemma->parsed()) return cmd_lemma_demo(slope, rprime, out_path, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    // ParameterError and DegenerateError
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace latfree::cli
