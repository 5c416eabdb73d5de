// projzero: varieties, Hilbert functions, normal forms, vanishing ideals and
// separators for ideals of projective dimension zero.

#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "projzero/eigen_solver.hpp"
#include "projzero/errors.hpp"
#include "projzero/graded_quotient.hpp"
#include "projzero/io.hpp"
#include "projzero/points.hpp"
#include "projzero/triplet.hpp"

using namespace projzero;
using nlohmann::json;

namespace {

struct Common {
  std::string file;
  bool json = false;
  std::uint64_t seed = 1;
  std::optional<unsigned> max_degree;
  std::string order;
  std::string ranking;
  std::string linear;
  std::size_t trials = 64;
  bool exhaustive = false;

  io::OrderOverride override() const {
    io::OrderOverride o;
    if (!order.empty()) o.kind = order;
    if (!ranking.empty()) o.ranking = io::split_names(ranking);
    return o;
  }
  std::optional<Form> linear_form(const Ring& ring) const {
    if (linear.empty()) return std::nullopt;
    Form l = parse_form(linear, ring);
    if (l.degree() != 1 || l.is_zero()) throw Error(ExitCode::input_error, "--linear must be a nonzero linear form");
    return l;
  }
  IdealPresentation ideal() const { return io::parse_ideal(io::read_text(file), override()); }
  io::PointsInput points() const { return io::parse_points(io::read_text(file), override()); }
};

void emit(const Common& c, const json& j, const std::string& text) {
  if (c.json)
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text;
}

int cmd_hilbert(const Common& c) {
  IdealPresentation I = c.ideal();
  HilbertScan scan = hilbert_scan(I, c.max_degree.value_or(default_max_degree(I)));
  json j = io::to_json(scan);
  j["command"] = "hilbert";
  emit(c, j, io::render_hilbert(scan));
  return 0;
}

int cmd_solve(const Common& c) {
  IdealPresentation I = c.ideal();
  SolveOptions opt;
  opt.seed = c.seed;
  opt.max_degree = c.max_degree;
  opt.max_trials = c.trials;
  opt.search = c.exhaustive ? SurjectionStrategy::Kind::exhaustive : SurjectionStrategy::Kind::random;
  opt.linear = c.linear_form(I.ring);
  SolutionReport report = solve(I, opt);
  json j = io::to_json(report, I.ring);
  j["command"] = "solve";
  emit(c, j, io::render_solution(report, I.ring));
  return 0;
}

int cmd_nf(const Common& c, const std::string& poly, const std::string& policy, const std::string& schedule,
           bool oracle) {
  IdealPresentation I = c.ideal();
  Form f = parse_form(poly, I.ring);
  TripletOptions opt;
  opt.policy = policy == "certified" ? DegreePolicy::certified_stable : DegreePolicy::first_surjective;
  opt.strategy = {c.exhaustive ? SurjectionStrategy::Kind::exhaustive : SurjectionStrategy::Kind::random, c.seed, c.trials};
  opt.max_degree = c.max_degree;
  opt.linear = c.linear_form(I.ring);
  BuiltTriplet built = build_triplet(I, opt);
  const Triplet& t = built.triplet;
  PowerSchedule sched = schedule == "linear" ? PowerSchedule::linear : PowerSchedule::binary;
  FastNormalForm nf = fast_normal_form(f, t, macaulay_base(t, built.lower, built.upper), sched);
  Form expanded = expand(nf, t);

  std::string lname = to_string(t.l, I.ring);
  std::string lpow = "(" + lname + ")" + (nf.power == 1 ? "" : "^" + std::to_string(nf.power));
  std::string factored;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (nf.coordinates[i].is_zero()) continue;
    if (!factored.empty()) factored += " + ";
    factored += nf.coordinates[i].to_string() + " * " + to_string(t.E[i], I.ring);
    if (nf.power > 0) factored += "*" + lpow;
  }
  if (factored.empty()) factored = "0";

  std::optional<bool> agree;
  if (oracle) {
    DegreePiece piece = ideal_piece(I, f.degree());
    agree = normal_form_by_degree(f, piece) == normal_form_by_degree(expanded, piece);
  }

  json j;
  j["command"] = "nf";
  j["degree"] = t.degree;
  j["l"] = lname;
  j["power"] = nf.power;
  j["basis"] = json::array();
  for (const auto& e : t.E) j["basis"].push_back(to_string(e, I.ring));
  j["coordinates"] = io::to_json(nf.coordinates);
  j["normal_form"] = factored;
  j["expanded"] = to_string(expanded, I.ring);
  if (agree) j["oracle_agrees"] = *agree;

  std::ostringstream os;
  os << "triplet degree " << t.degree << ", l = " << lname << '\n';
  os << "basis: " << lpow << " * (";
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? ", " : "") << to_string(t.E[i], I.ring);
  os << ")\ncoordinates: ";
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? " " : "") << nf.coordinates[i].to_string();
  os << "\nnormal form: " << factored << '\n';
  os << "expanded: " << to_string(expanded, I.ring) << '\n';
  if (agree) os << "oracle: " << (*agree ? "agrees" : "DISAGREES") << '\n';
  emit(c, j, os.str());
  return agree && !*agree ? 1 : 0;
}

int cmd_vanish(const Common& c, bool emit_ideal) {
  io::PointsInput in = c.points();
  ProjPointSet P = normalize(in.raw, in.ring.field);
  if (emit_ideal) {
    std::cout << io::write_ideal(IdealPresentation(in.ring, vanishing_ideal(P, in.ring)));
    return 0;
  }
  PointTriplet pt = bm_triplet(P, in.ring, c.linear_form(in.ring));
  const Triplet& t = pt.triplet;

  json j;
  j["command"] = "vanish";
  j["hf"] = pt.hf;
  j["stop_degree"] = t.degree;
  j["B"] = json::array();
  for (const auto& Bd : pt.B) {
    json row = json::array();
    for (const auto& b : Bd) row.push_back(to_string(b, in.ring));
    j["B"].push_back(row);
  }
  j["initials"] = json::array();
  for (const auto& s : pt.initials) j["initials"].push_back(to_string(s, in.ring));
  j["l"] = to_string(t.l, in.ring);
  j["matrices"] = json::object();
  for (std::size_t v = 0; v < t.A.size(); ++v) j["matrices"][in.ring.vars[v]] = io::to_json(t.A[v]);

  std::ostringstream os;
  os << "hf: " << io::join(pt.hf) << '\n' << "stop degree: " << t.degree << '\n';
  for (std::size_t d = 0; d < pt.B.size(); ++d) {
    os << "B_" << d << ":";
    for (const auto& b : pt.B[d]) os << ' ' << to_string(b, in.ring);
    os << '\n';
  }
  os << "initials:";
  for (const auto& s : pt.initials) os << ' ' << to_string(s, in.ring);
  os << "\nl = " << to_string(t.l, in.ring) << '\n';
  for (std::size_t v = 0; v < t.A.size(); ++v) os << "A_" << in.ring.vars[v] << ":\n" << t.A[v].to_string();
  emit(c, j, os.str());
  return 0;
}

int cmd_separators(const Common& c, bool unit) {
  io::PointsInput in = c.points();
  ProjPointSet P = normalize(in.raw, in.ring.field);
  CMatrix cm = c_matrix(P);
  std::vector<Form> Q = separators(P, unit);
  const std::size_t n = P.nvars - 1, m = P.size();
  const std::size_t bound = n * m + m * m;

  json j;
  j["command"] = "separators";
  j["separators"] = json::array();
  for (const auto& q : Q) j["separators"].push_back(to_string(q, in.ring));
  j["comparisons"] = cm.comparisons;
  j["bound"] = bound;
  std::ostringstream os;
  for (std::size_t i = 0; i < Q.size(); ++i) os << "Q_" << i + 1 << " = " << to_string(Q[i], in.ring) << '\n';
  os << "comparisons: " << cm.comparisons << " (bound n*m + m^2 = " << bound << ")\n";
  emit(c, j, os.str());
  return 0;
}

int cmd_bound(const Common& c) {
  IdealPresentation I = c.ideal();
  DegreeBoundReport r = degree_bound_report(I, c.max_degree.value_or(default_max_degree(I)));
  const HilbertScan& scan = r.scan;

  json j;
  j["command"] = "bound";
  j["stabilization_degree"] = *scan.stabilization_degree;
  j["m"] = *scan.m;
  j["bound"] = r.bound;
  j["measured"] = r.measured;
  j["checked_through"] = r.horizon;
  j["initial_generators"] = json::array();
  for (const auto& g : r.generators) j["initial_generators"].push_back(to_string(g, I.ring));
  std::ostringstream os;
  os << "GB degree bound = max(d*, m) = max(" << *scan.stabilization_degree << ", " << *scan.m << ") = " << r.bound << '\n';
  os << "measured max initial-generator degree = " << r.measured << " (checked through degree " << r.horizon << ")\n";
  emit(c, j, os.str());
  return 0;
}

void add_common(CLI::App* sub, Common& c, bool ideal) {
  sub->add_option("file", c.file, ideal ? "ideal file ('-' for stdin)" : "points file ('-' for stdin)")->required();
  sub->add_flag("--json", c.json, "emit one JSON document");
  sub->add_option("--order", c.order, "monomial order: degrevlex or lex");
  sub->add_option("--vars-ranking", c.ranking, "variables from most to least significant, e.g. z,y,x");
}

void add_search(CLI::App* sub, Common& c) {
  sub->add_option("--seed", c.seed, "random seed");
  sub->add_option("--max-degree", c.max_degree, "degree cap for the Hilbert scan");
  sub->add_option("--linear", c.linear, "use this linear form as l");
  sub->add_option("--trials", c.trials, "random linear forms tried per degree");
  sub->add_flag("--exhaustive", c.exhaustive, "try every normalized linear form (prime fields)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver for ideals of projective dimension zero"};
  app.require_subcommand(1);
  Common c;
  std::string poly, policy = "first", schedule = "binary";
  bool oracle = false, emit_ideal = false, unit = false;

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function and Gotzmann stabilization");
  add_common(hilbert, c, true);
  hilbert->add_option("--max-degree", c.max_degree, "degree cap");

  auto* solve_cmd = app.add_subcommand("solve", "variety with multiplicities");
  add_common(solve_cmd, c, true);
  add_search(solve_cmd, c);

  auto* nf = app.add_subcommand("nf", "normal form through the multiplication matrices");
  add_common(nf, c, true);
  nf->add_option("poly", poly, "homogeneous polynomial")->required();
  add_search(nf, c);
  nf->add_option("--policy", policy, "triplet degree: first or certified")->check(CLI::IsMember({"first", "certified"}));
  nf->add_option("--schedule", schedule, "matrix powers: binary or linear")->check(CLI::IsMember({"binary", "linear"}));
  nf->add_flag("--oracle", oracle, "compare with Macaulay reduction");

  auto* vanish = app.add_subcommand("vanish", "triplet of a point set");
  add_common(vanish, c, false);
  vanish->add_option("--linear", c.linear, "use this linear form as l");
  vanish->add_flag("--emit-ideal", emit_ideal, "print the vanishing ideal as an ideal file");

  auto* seps = app.add_subcommand("separators", "projective separators of a point set");
  add_common(seps, c, false);
  seps->add_flag("--normalize", unit, "scale so that Q_i(p_i) = 1");

  auto* bound = app.add_subcommand("bound", "Groebner degree bound against measured generators");
  add_common(bound, c, true);
  bound->add_option("--max-degree", c.max_degree, "degree cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ExitCode::input_error);
  }

  try {
    if (*hilbert) return cmd_hilbert(c);
    if (*solve_cmd) return cmd_solve(c);
    if (*nf) return cmd_nf(c, poly, policy, schedule, oracle);
    if (*vanish) return cmd_vanish(c, emit_ideal);
    if (*seps) return cmd_separators(c, unit);
    if (*bound) return cmd_bound(c);
  } catch (const CapExceeded& e) {
    if (c.json)
      std::cout << json{{"error", e.what()}, {"partial_hf", e.partial_hf()}}.dump(2) << '\n';
    else
      std::cout << "partial hf: " << io::join(e.partial_hf()) << '\n';
    std::cerr << "projzero: " << e.what() << '\n';
    return static_cast<int>(e.code());
  } catch (const Error& e) {
    std::cerr << "projzero: " << e.what() << '\n';
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::cerr << "projzero: " << e.what() << '\n';
    return static_cast<int>(ExitCode::input_error);
  }
  return 0;
}
