#include "sgshell_cli/run.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "sgshell/asymptotics.hpp"
#include "sgshell/boundary.hpp"
#include "sgshell/closed_form.hpp"
#include "sgshell/equilibrium.hpp"
#include "sgshell/errors.hpp"
#include "sgshell/geometry.hpp"

namespace sgshell::cli {

namespace {

using json = nlohmann::ordered_json;

std::string csv_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string text_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string pad(const std::string& s, size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

json vec(const Eigen::Vector3d& v) { return json::array({v[0], v[1], v[2]}); }
json mat(const Eigen::Matrix2d& m) { return json::array({json::array({m(0, 0), m(0, 1)}), json::array({m(1, 0), m(1, 1)})}); }

/// Column-aligned plain text table.
std::string table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<size_t> width(header.size());
  for (size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& r : rows) width[c] = std::max(width[c], r[c].size());
  }
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (size_t c = 0; c < cells.size(); ++c) os << pad(cells[c], width[c] + (c + 1 < cells.size() ? 2 : 0));
    os << '\n';
  };
  line(header);
  std::vector<std::string> rule;
  for (size_t w : width) rule.emplace_back(w, '-');
  line(rule);
  for (const auto& r : rows) line(r);
  return os.str();
}

Chart::JetMap test_displacement(double amplitude) {
  return [amplitude](const Jet& u, const Jet& v) {
    return Vec3J(amplitude * 0.3 * sin(u + 0.5 * v), amplitude * 0.2 * v * cos(u),
                 amplitude * (0.25 * u * v + 0.1 * sin(2.0 * v)));
  };
}

Chart reference_chart(const RunConfig& c) { return ChartRegistry::instance().make(c.geometry.chart, c.geometry.params); }

Chart deformed_chart(const RunConfig& c, const Chart& reference) {
  const DeformationBlock& d = c.deformation;
  if (d.kind == "stretch") {
    return reference.transformed(d.stretch * Eigen::Matrix3d::Identity(), Eigen::Vector3d::Zero()).renamed("stretched");
  }
  if (d.kind == "displace") return reference.displaced(test_displacement(d.amplitude)).renamed("displaced");
  return reference.renamed("identity");
}

/// The equilibrium pipeline only knows the dilatational family; a classical
/// material is the ℓ_s = 0 member.
MaterialParameters equilibrium_material(const MaterialParameters& m) {
  MaterialParameters out = m;
  if (std::holds_alternative<std::monostate>(out.gradient)) out.gradient = Dilatational{0.0};
  if (std::holds_alternative<ToupinMindlin>(out.gradient)) {
    throw Error(ErrorKind::MissingModuli, "stress resultants are only available for the dilatational model");
  }
  return out;
}

ExampleCase example_case(const RunConfig& c) {
  ExampleCase e = ExampleCase::defaults(c.task.example);
  e.material = equilibrium_material(c.material);
  e.R = c.example.R;
  e.L = c.example.L;
  e.eta = c.example.eta;
  e.zeta = c.example.zeta;
  e.gamma = c.example.gamma;
  e.validate();
  return e;
}

void task_energy(const RunConfig& c, RunResult& r) {
  const Chart ref = reference_chart(c);
  const Chart def = deformed_chart(c, ref);
  const MaterialParameters& m = c.material;
  const bool gradient = !std::holds_alternative<std::monostate>(m.gradient);

  double koiter = 0.0, w4 = 0.0, area = 0.0;
  std::ostringstream csv;
  csv << "theta1,theta2,koiter,w4,tr_eps,tr_rho\n";
  const auto nodes = parameter_nodes(ref.domain(), c.numerics.quad, c.numerics.panels);
  for (const auto& node : nodes) {
    const KinematicState kin = kinematics_from(strain_jets(ref, def, node.theta, gradient ? 3 : 2));
    const double wk = koiter_density(kin, m);
    const double w4k = w4_density(kin, m);
    const double dA = node.weight * kin.ref.area_weight;
    koiter += dA * wk;
    w4 += dA * w4k;
    area += dA;
    csv << csv_num(node.theta[0]) << ',' << csv_num(node.theta[1]) << ',' << csv_num(wk) << ',' << csv_num(w4k) << ','
        << csv_num(kin.tr_eps) << ',' << csv_num(kin.tr_rho) << '\n';
  }
  AsymptoticSettings settings;
  settings.quadrature_order = c.numerics.quad;
  settings.panels = c.numerics.panels;
  settings.zeta_order = c.numerics.zeta_order;
  const double bulk = through_thickness_energy(ref, def, m, settings);

  json& res = r.report["results"];
  res["area"] = area;
  res["koiter"] = koiter;
  res["w4"] = w4;
  res["shell_total"] = koiter + w4;
  res["through_thickness"] = bulk;
  res["nodes"] = nodes.size();
  r.csv = csv.str();
  r.text = table({"quantity", "value"}, {{"area", text_num(area)},
                                         {"koiter", text_num(koiter)},
                                         {"w4", text_num(w4)},
                                         {"shell_total", text_num(koiter + w4)},
                                         {"through_thickness", text_num(bulk)}});
}

void task_resultants(const RunConfig& c, RunResult& r) {
  const Chart ref = reference_chart(c);
  const Chart def = deformed_chart(c, ref);
  const MaterialParameters m = equilibrium_material(c.material);
  const ParameterDomain& d = ref.domain();
  const int n = c.task.grid;

  std::ostringstream csv;
  csv << "theta1,theta2,sigma11,sigma12,sigma21,sigma22,M11,M12,M21,M22,g1,g2,g3\n";
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Eigen::Vector2d theta(d.u0 + (i + 0.5) / n * (d.u1 - d.u0), d.v0 + (j + 0.5) / n * (d.v1 - d.v0));
      const StressResultants s = values(resultant_jets(strain_jets(ref, def, theta, 4), m));
      csv << csv_num(theta[0]) << ',' << csv_num(theta[1]);
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) csv << ',' << csv_num(s.sigma(a, b));
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) csv << ',' << csv_num(s.M(a, b));
      for (int k = 0; k < 3; ++k) csv << ',' << csv_num(s.g[k]);
      csv << '\n';
    }
  r.csv = csv.str();

  const Boundary boundary = Boundary::of(d);
  std::ostringstream edges;
  edges << "edge,s,t1,t2,t3,m1,m2,m3,c1,c2,c3\n";
  const int samples = c.task.samples;
  for (const BoundaryEdge& e : boundary.edges) {
    for (int k = 0; k < samples; ++k) {
      const double t = (k + 0.5) / samples;
      const EdgeLoads l = edge_loads_at(ref, def, e, t, m);
      edges << e.name << ',' << csv_num(t * (e.end - e.start).norm());
      for (const Eigen::Vector3d* v : {&l.t, &l.m, &l.c})
        for (int q = 0; q < 3; ++q) edges << ',' << csv_num((*v)[q]);
      edges << '\n';
    }
  }
  r.edge_csv = edges.str();

  json corners = json::array();
  for (const CornerForce& f : corner_forces(ref, def, boundary, m)) {
    corners.push_back({{"corner", f.name}, {"theta", {f.theta[0], f.theta[1]}}, {"f", vec(f.f)}});
  }
  const Eigen::Vector3d balance = total_force_balance(ref, def, boundary, m, c.numerics.quad, c.numerics.panels);
  json& res = r.report["results"];
  res["grid"] = n;
  res["edge_samples"] = samples;
  res["corners"] = corners;
  res["total_force_balance"] = vec(balance);
  r.text = "grid " + std::to_string(n) + "x" + std::to_string(n) + ", " + std::to_string(samples) +
           " samples per edge\ntotal force balance |sum| = " + text_num(balance.norm()) + "\n";
}

void comparison_rows(const std::vector<ComparisonRow>& rows, int draw, std::ostringstream& csv) {
  for (const ComparisonRow& row : rows) {
    csv << draw << ',' << row.quantity << ',' << csv_num(row.closed_form) << ',' << csv_num(row.pipeline) << ','
        << csv_num(row.rel_error) << ',' << (row.pass ? "pass" : "fail") << '\n';
  }
}

void task_example(const RunConfig& c, RunResult& r) {
  const ExampleCase e = example_case(c);
  const ExampleSolution sol = example_solution(e);
  const auto rows = compare_with_pipeline(e, c.task.samples);

  std::ostringstream csv;
  csv << "draw,quantity,closed_form,pipeline,rel_error,status\n";
  comparison_rows(rows, 0, csv);

  auto summarize = [](const std::vector<ComparisonRow>& rs) {
    double worst = 0.0;
    int failures = 0;
    for (const auto& row : rs) {
      worst = std::max(worst, row.rel_error);
      failures += row.pass ? 0 : 1;
    }
    return std::pair{worst, failures};
  };
  const auto [worst, failures] = summarize(rows);

  json draws = json::array();
  int draw_failures = 0;
  for (int k = 0; k < c.task.draws; ++k) {
    const std::uint64_t seed = c.numerics.seed + static_cast<std::uint64_t>(k);
    const ExampleCase rc = ExampleCase::random(c.task.example, seed);
    const auto rr = compare_with_pipeline(rc, c.task.samples);
    comparison_rows(rr, k + 1, csv);
    const auto [w, f] = summarize(rr);
    draw_failures += f;
    draws.push_back({{"seed", seed}, {"rows", rr.size()}, {"failures", f}, {"max_rel_error", w}});
  }

  json& res = r.report["results"];
  res["example"] = std::string(to_string(e.kind));
  res["closed_form"] = {{"sigma", mat(sol.sigma)}, {"N", mat(sol.N)}, {"M", mat(sol.M)}, {"g_radial", sol.g_radial}};
  res["rows"] = rows.size();
  res["failures"] = failures;
  res["max_rel_error"] = worst;
  res["draws"] = draws;
  res["pass"] = failures == 0 && draw_failures == 0;
  r.csv = csv.str();

  std::vector<std::vector<std::string>> text_rows;
  for (const auto& row : rows) {
    text_rows.push_back({row.quantity, text_num(row.closed_form), text_num(row.pipeline), text_num(row.rel_error),
                         row.pass ? "pass" : "FAIL"});
  }
  r.text = table({"quantity", "closed form", "pipeline", "rel error", "status"}, text_rows);
}

void task_solve_zeta(const RunConfig& c, RunResult& r) {
  RunConfig rc = c;
  rc.task.example = ExampleKind::ExtensionRadial;
  const ExampleCase e = example_case(rc);
  json rows = json::array();
  std::ostringstream csv;
  csv << "eta,zeta,residual,iterations\n";
  std::vector<std::vector<std::string>> text_rows;
  for (double eta : c.task.eta) {
    const ZetaSolve z = solve_zeta_for_eta(eta, e);
    rows.push_back({{"eta", eta}, {"zeta", z.zeta}, {"residual", z.residual}, {"iterations", z.iterations}});
    csv << csv_num(eta) << ',' << csv_num(z.zeta) << ',' << csv_num(z.residual) << ',' << z.iterations << '\n';
    text_rows.push_back({text_num(eta), text_num(z.zeta), text_num(z.residual), std::to_string(z.iterations)});
  }
  r.report["results"]["solutions"] = rows;
  r.csv = csv.str();
  r.text = table({"eta", "zeta", "g.e_r", "iterations"}, text_rows);
}

void task_converge(const RunConfig& c, RunResult& r) {
  FamilyOptions opts;
  opts.lambda = c.material.lambda;
  opts.mu = c.material.mu;
  opts.ell_ratio = c.numerics.ell_ratio;
  opts.h_grid = c.numerics.h_grid;
  AsymptoticSettings settings;
  settings.quadrature_order = c.numerics.quad;
  settings.panels = c.numerics.panels;
  settings.zeta_order = c.numerics.zeta_order;
  settings.bending_scale = c.numerics.bending_scale;

  ConvergenceReport rep;
  switch (c.task.converge) {
    case ConvergeKind::Stored: {
      const ShellDensity density =
          c.task.model == GradientModel::None ? ShellDensity::Koiter : ShellDensity::KoiterPlusW4;
      rep = expansion_residual(scaling_family(c.task.family, c.task.model, opts), density, settings);
      break;
    }
    case ConvergeKind::Koiter3Term:
      rep = expansion_residual(scaling_family(c.task.family, GradientModel::None, opts), ShellDensity::ThreeTerm,
                               settings);
      break;
    case ConvergeKind::Kinetic: {
      KineticFamily fam = kinetic_family(c.task.family, KineticMotion::OscillatingBend, opts);
      rep = kinetic_expansion_residual(fam, settings);
      break;
    }
  }

  json rows = json::array();
  std::ostringstream csv;
  csv << "h,residual,local_slope\n";
  std::vector<std::vector<std::string>> text_rows;
  for (size_t i = 0; i < rep.h.size(); ++i) {
    const double s = rep.local_slope[i];
    rows.push_back({{"h", rep.h[i]}, {"residual", rep.residual[i]},
                    {"local_slope", std::isfinite(s) ? json(s) : json(nullptr)}});
    csv << csv_num(rep.h[i]) << ',' << csv_num(rep.residual[i]) << ',' << (std::isfinite(s) ? csv_num(s) : "") << '\n';
    text_rows.push_back({text_num(rep.h[i]), text_num(rep.residual[i]), std::isfinite(s) ? text_num(s) : "-"});
  }
  json& res = r.report["results"];
  res["study"] = rep.name;
  res["rows"] = rows;
  res["slope"] = rep.slope;
  res["intercept"] = rep.intercept;
  res["target"] = rep.target;
  res["pass"] = rep.pass;
  r.csv = csv.str();
  r.text = rep.name + "\n" + table({"h", "residual", "local slope"}, text_rows) + "fitted slope " +
           text_num(rep.slope) + " (target " + text_num(rep.target) + "): " + (rep.pass ? "pass" : "FAIL") + "\n";
}

std::vector<std::string> collect_warnings(const RunConfig& c) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  auto add = [&](const std::string& w) {
    if (seen.insert(w).second) out.push_back(w);
  };
  for (const auto& w : regime_warnings(c.material)) add(w);
  if (c.material.lambda <= 0.0) add("lambda = " + text_num(c.material.lambda) + " is not positive");
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& content, std::vector<std::string>& files) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::TaskError, "cannot write '" + path.string() + "'");
  out << content;
  files.push_back(path.string());
}

}  // namespace

RunResult run(RunConfig config, const RunOptions& options) {
  if (options.out_dir) config.output.dir = *options.out_dir;
  if (options.quad) config.numerics.quad = *options.quad;
  if (options.seed) config.numerics.seed = *options.seed;
  validate(config);

  RunResult r;
  r.report["tool"] = "sgshell";
  r.report["task"] = std::string(to_string(config.task.kind));
  r.report["config"] = config.resolved();
  const std::vector<std::string> warnings = collect_warnings(config);
  r.report["warnings"] = warnings;
  if (options.strict && !warnings.empty()) {
    throw Error(ErrorKind::RegimeViolation, "--strict: " + warnings.front());
  }
  r.report["results"] = json::object();

  try {
    switch (config.task.kind) {
      case TaskKind::Energy: task_energy(config, r); break;
      case TaskKind::Resultants: task_resultants(config, r); break;
      case TaskKind::Example: task_example(config, r); break;
      case TaskKind::SolveZeta: task_solve_zeta(config, r); break;
      case TaskKind::Converge: task_converge(config, r); break;
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ConfigError) throw;
    throw Error(ErrorKind::TaskError, std::string(to_string(config.task.kind)) + ": " + e.what());
  }

  if (options.write_files) {
    namespace fs = std::filesystem;
    const fs::path dir(config.output.dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw Error(ErrorKind::TaskError, "cannot create '" + dir.string() + "': " + ec.message());
    const std::string& stem = config.output.stem;
    write_file(dir / (stem + ".json"), r.report.dump(2) + "\n", r.files);
    write_file(dir / (stem + ".txt"), r.text, r.files);
    if (!r.csv.empty()) write_file(dir / (stem + ".csv"), r.csv, r.files);
    if (!r.edge_csv.empty()) write_file(dir / (stem + "_edges.csv"), r.edge_csv, r.files);
  }
  return r;
}

int exit_code_for(const std::exception& e) {
  if (const auto* err = dynamic_cast<const Error*>(&e)) {
    switch (err->kind()) {
      case ErrorKind::ConfigError: return kExitConfig;
      case ErrorKind::RegimeViolation: return kExitStrict;
      default: return kExitTask;
    }
  }
  return kExitTask;
}

}  // namespace sgshell::cli
