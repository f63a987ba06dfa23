#include "sgshell_cli/run_config.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "sgshell/errors.hpp"

namespace sgshell::cli {

namespace pt = boost::property_tree;

namespace {

[[noreturn]] void config_error(const std::string& key, const std::string& what) {
  throw Error(ErrorKind::ConfigError, key + ": " + what);
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) config_error(key, "'" + text + "' is not a number");
  return v;
}

long long to_integer(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) config_error(key, "'" + text + "' is not an integer");
  return v;
}

std::vector<double> to_list(const std::string& key, const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_double(key, item));
  if (out.empty()) config_error(key, "empty list");
  return out;
}

GradientModel parse_model(const std::string& key, const std::string& name) {
  if (name == "none" || name == "koiter") return GradientModel::None;
  if (name == "dilatational") return GradientModel::Dilatational;
  if (name == "toupin-mindlin") return GradientModel::ToupinMindlin;
  config_error(key, "unknown model '" + name + "' (expected none, dilatational or toupin-mindlin)");
}

std::string_view model_name(GradientModel m) {
  switch (m) {
    case GradientModel::None: return "none";
    case GradientModel::Dilatational: return "dilatational";
    case GradientModel::ToupinMindlin: return "toupin-mindlin";
  }
  return "none";
}

const std::map<std::string, std::set<std::string>>& known_keys() {
  static const std::map<std::string, std::set<std::string>> keys{
      {"material", {"lambda", "mu", "h", "model", "ell_s", "a1", "a2", "a3", "a4", "a5", "ell_k", "rho_R", "C1"}},
      {"geometry", {"chart"}},  // plus free numeric chart parameters
      {"deformation", {"kind", "stretch", "amplitude"}},
      {"task", {"kind", "example", "converge", "family", "model", "eta", "draws", "samples", "grid"}},
      {"example", {"R", "L", "eta", "zeta", "gamma"}},
      {"numerics", {"quad", "panels", "zeta_order", "h_grid", "ell_ratio", "bending_scale", "seed"}},
      {"output", {"dir", "stem"}},
  };
  return keys;
}

// Reads one section as a flat key -> text map and rejects unknown keys.
std::map<std::string, std::string> section(const pt::ptree& tree, const std::string& name) {
  std::map<std::string, std::string> out;
  const auto child = tree.get_child_optional(name);
  if (!child) return out;
  const auto& allowed = known_keys().at(name);
  for (const auto& [key, node] : *child) {
    if (name != "geometry" && !allowed.count(key)) config_error(name + "." + key, "unknown key");
    out[key] = trim(node.data());
  }
  return out;
}

struct Reader {
  std::string prefix;
  std::map<std::string, std::string> values;

  bool has(const std::string& key) const { return values.count(key) > 0; }
  std::string name(const std::string& key) const { return prefix + "." + key; }

  double number(const std::string& key, double fallback) const {
    return has(key) ? to_double(name(key), values.at(key)) : fallback;
  }
  double required(const std::string& key) const {
    if (!has(key)) config_error(name(key), "missing");
    return to_double(name(key), values.at(key));
  }
  long long integer(const std::string& key, long long fallback) const {
    return has(key) ? to_integer(name(key), values.at(key)) : fallback;
  }
  std::string text(const std::string& key, const std::string& fallback) const {
    return has(key) ? values.at(key) : fallback;
  }
};

void require_positive(const std::string& key, double v) {
  if (!(v > 0.0)) config_error(key, "must be positive, got " + std::to_string(v));
}

void require_nonnegative(const std::string& key, double v) {
  if (!(v >= 0.0)) config_error(key, "must be non-negative, got " + std::to_string(v));
}

}  // namespace

std::string_view to_string(TaskKind kind) {
  switch (kind) {
    case TaskKind::Energy: return "energy";
    case TaskKind::Resultants: return "resultants";
    case TaskKind::Example: return "example";
    case TaskKind::SolveZeta: return "solve-zeta";
    case TaskKind::Converge: return "converge";
  }
  return "energy";
}

std::string_view to_string(ConvergeKind kind) {
  switch (kind) {
    case ConvergeKind::Stored: return "stored";
    case ConvergeKind::Kinetic: return "kinetic";
    case ConvergeKind::Koiter3Term: return "koiter3term";
  }
  return "stored";
}

TaskKind parse_task_kind(const std::string& name) {
  for (TaskKind k : {TaskKind::Energy, TaskKind::Resultants, TaskKind::Example, TaskKind::SolveZeta,
                     TaskKind::Converge}) {
    if (name == to_string(k)) return k;
  }
  config_error("task.kind", "unknown task '" + name + "'");
}

ConvergeKind parse_converge_kind(const std::string& name) {
  for (ConvergeKind k : {ConvergeKind::Stored, ConvergeKind::Kinetic, ConvergeKind::Koiter3Term}) {
    if (name == to_string(k)) return k;
  }
  config_error("task.converge", "unknown study '" + name + "' (expected stored, kinetic or koiter3term)");
}

RunConfig parse_config(std::istream& in, std::optional<TaskKind> forced_task) {
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw Error(ErrorKind::ConfigError, "line " + std::to_string(e.line()) + ": " + e.message());
  }
  for (const auto& [name, node] : tree) {
    if (!known_keys().count(name)) config_error(name, "unknown section");
    if (node.empty() && !node.data().empty()) config_error(name, "top-level keys are not allowed; use a section");
  }
  if (!tree.get_child_optional("material")) config_error("material", "missing section");

  RunConfig c;

  const Reader mat{"material", section(tree, "material")};
  c.material.lambda = mat.required("lambda");
  c.material.mu = mat.required("mu");
  c.material.h = mat.required("h");
  c.material.ell_k = mat.number("ell_k", 0.0);
  c.material.rho_R = mat.number("rho_R", 1.0);
  c.material.C1 = mat.number("C1", 1.0);
  const bool any_a = mat.has("a1") || mat.has("a2") || mat.has("a3") || mat.has("a4") || mat.has("a5");
  const std::string model_text = mat.text("model", any_a ? "toupin-mindlin" : mat.has("ell_s") ? "dilatational" : "none");
  const GradientModel model = parse_model("material.model", model_text);
  if (model == GradientModel::Dilatational) {
    c.material.gradient = Dilatational{mat.required("ell_s")};
  } else if (model == GradientModel::ToupinMindlin) {
    ToupinMindlin tm;
    for (int j = 0; j < 5; ++j) tm.a[static_cast<size_t>(j)] = mat.required("a" + std::to_string(j + 1));
    c.material.gradient = tm;
  }

  const Reader geo{"geometry", section(tree, "geometry")};
  c.geometry.chart = geo.text("chart", "plate");
  for (const auto& [key, text] : geo.values) {
    if (key != "chart") c.geometry.params[key] = to_double("geometry." + key, text);
  }

  const Reader def{"deformation", section(tree, "deformation")};
  c.deformation.kind = def.text("kind", "identity");
  c.deformation.stretch = def.number("stretch", 1.0);
  c.deformation.amplitude = def.number("amplitude", 0.0);

  const Reader task{"task", section(tree, "task")};
  if (task.has("kind")) {
    const TaskKind from_file = parse_task_kind(task.text("kind", ""));
    if (forced_task && *forced_task != from_file) {
      config_error("task.kind", "file asks for '" + std::string(to_string(from_file)) + "' but the subcommand is '" +
                                    std::string(to_string(*forced_task)) + "'");
    }
    c.task.kind = from_file;
  } else if (forced_task) {
    c.task.kind = *forced_task;
  } else {
    config_error("task.kind", "missing");
  }
  if (task.has("example")) {
    try {
      c.task.example = parse_example_kind(task.text("example", ""));
    } catch (const Error& e) {
      config_error("task.example", e.what());
    }
  }
  if (task.has("converge")) c.task.converge = parse_converge_kind(task.text("converge", ""));
  c.task.family = task.text("family", "plate");
  c.task.model = parse_model("task.model", task.text("model", model_text));
  if (task.has("eta")) c.task.eta = to_list("task.eta", task.text("eta", ""));
  c.task.draws = static_cast<int>(task.integer("draws", 0));
  c.task.samples = static_cast<int>(task.integer("samples", 3));
  c.task.grid = static_cast<int>(task.integer("grid", 5));

  const Reader ex{"example", section(tree, "example")};
  c.example.R = ex.number("R", 1.0);
  c.example.L = ex.number("L", 2.0);
  c.example.eta = ex.number("eta", 0.9);
  c.example.zeta = ex.number("zeta", 1.1);
  c.example.gamma = ex.number("gamma", 0.2);

  const Reader num{"numerics", section(tree, "numerics")};
  c.numerics.quad = static_cast<int>(num.integer("quad", 6));
  c.numerics.panels = static_cast<int>(num.integer("panels", 2));
  c.numerics.zeta_order = static_cast<int>(num.integer("zeta_order", 8));
  if (num.has("h_grid")) c.numerics.h_grid = to_list("numerics.h_grid", num.text("h_grid", ""));
  c.numerics.ell_ratio = num.number("ell_ratio", 0.5);
  c.numerics.bending_scale = num.number("bending_scale", 1.0);
  const long long seed = num.integer("seed", 1);
  if (seed < 0) config_error("numerics.seed", "must be non-negative");
  c.numerics.seed = static_cast<std::uint64_t>(seed);

  const Reader out{"output", section(tree, "output")};
  c.output.dir = out.text("dir", ".");
  c.output.stem = out.text("stem", "sgshell");

  validate(c);
  return c;
}

RunConfig load_config(const std::string& path, std::optional<TaskKind> forced_task) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ConfigError, "--config: cannot open '" + path + "'");
  return parse_config(in, forced_task);
}

void validate(const RunConfig& c) {
  const MaterialParameters& m = c.material;
  require_positive("material.mu", m.mu);
  require_positive("material.lambda + 2 mu", m.lambda + 2.0 * m.mu);
  require_positive("material.h", m.h);
  require_nonnegative("material.ell_k", m.ell_k);
  require_positive("material.rho_R", m.rho_R);
  require_positive("material.C1", m.C1);
  if (const auto* d = std::get_if<Dilatational>(&m.gradient)) require_nonnegative("material.ell_s", d->ell_s);

  if (!ChartRegistry::instance().contains(c.geometry.chart)) {
    config_error("geometry.chart", "unknown chart '" + c.geometry.chart + "'");
  }
  for (const auto& [key, v] : c.geometry.params) {
    if ((key == "R" || key == "L" || key == "r" || key == "half_angle") && !(v > 0.0)) {
      config_error("geometry." + key, "must be positive");
    }
  }
  const std::string& kind = c.deformation.kind;
  if (kind != "identity" && kind != "stretch" && kind != "displace") {
    config_error("deformation.kind", "unknown deformation '" + kind + "' (expected identity, stretch or displace)");
  }
  require_positive("deformation.stretch", c.deformation.stretch);

  if (c.task.family != "plate" && c.task.family != "cylinder") {
    config_error("task.family", "unknown family '" + c.task.family + "' (expected plate or cylinder)");
  }
  for (double eta : c.task.eta) {
    if (!(eta > 0.0 && eta < 1.0)) config_error("task.eta", "each value must lie in (0, 1)");
  }
  if (c.task.draws < 0) config_error("task.draws", "must be non-negative");
  if (c.task.samples < 1) config_error("task.samples", "must be at least 1");
  if (c.task.grid < 1) config_error("task.grid", "must be at least 1");

  require_positive("example.R", c.example.R);
  require_positive("example.L", c.example.L);
  require_positive("example.eta", c.example.eta);
  require_positive("example.zeta", c.example.zeta);

  if (c.numerics.quad < 1 || c.numerics.quad > 64) config_error("numerics.quad", "must lie in [1, 64]");
  if (c.numerics.panels < 1) config_error("numerics.panels", "must be at least 1");
  if (c.numerics.zeta_order < 1 || c.numerics.zeta_order > 64) config_error("numerics.zeta_order", "must lie in [1, 64]");
  if (c.numerics.h_grid.size() < 3) config_error("numerics.h_grid", "needs at least three values");
  for (double h : c.numerics.h_grid) require_positive("numerics.h_grid", h);
  require_positive("numerics.ell_ratio", c.numerics.ell_ratio);
  require_positive("numerics.bending_scale", c.numerics.bending_scale);
  if (c.output.stem.empty()) config_error("output.stem", "must not be empty");
}

nlohmann::ordered_json RunConfig::resolved() const {
  nlohmann::ordered_json j;
  auto& m = j["material"];
  m["lambda"] = material.lambda;
  m["mu"] = material.mu;
  m["h"] = material.h;
  if (const auto* d = std::get_if<Dilatational>(&material.gradient)) {
    m["model"] = "dilatational";
    m["ell_s"] = d->ell_s;
  } else if (const auto* tm = std::get_if<ToupinMindlin>(&material.gradient)) {
    m["model"] = "toupin-mindlin";
    for (size_t k = 0; k < 5; ++k) m["a" + std::to_string(k + 1)] = tm->a[k];
  } else {
    m["model"] = "none";
  }
  m["ell_k"] = material.ell_k;
  m["rho_R"] = material.rho_R;
  m["C1"] = material.C1;

  j["geometry"]["chart"] = geometry.chart;
  for (const auto& [key, v] : geometry.params) j["geometry"][key] = v;

  j["deformation"] = {{"kind", deformation.kind}, {"stretch", deformation.stretch},
                      {"amplitude", deformation.amplitude}};

  auto& t = j["task"];
  t["kind"] = std::string(to_string(task.kind));
  t["example"] = std::string(to_string(task.example));
  t["converge"] = std::string(to_string(task.converge));
  t["family"] = task.family;
  t["model"] = std::string(model_name(task.model));
  t["eta"] = task.eta;
  t["draws"] = task.draws;
  t["samples"] = task.samples;
  t["grid"] = task.grid;

  j["example"] = {{"R", example.R}, {"L", example.L}, {"eta", example.eta}, {"zeta", example.zeta},
                  {"gamma", example.gamma}};

  auto& n = j["numerics"];
  n["quad"] = numerics.quad;
  n["panels"] = numerics.panels;
  n["zeta_order"] = numerics.zeta_order;
  n["h_grid"] = numerics.h_grid;
  n["ell_ratio"] = numerics.ell_ratio;
  n["bending_scale"] = numerics.bending_scale;
  n["seed"] = numerics.seed;

  j["output"] = {{"dir", output.dir}, {"stem", output.stem}};
  return j;
}

}  // namespace sgshell::cli
