#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sgshell/asymptotics.hpp"
#include "sgshell/charts.hpp"
#include "sgshell/closed_form.hpp"
#include "sgshell/constitutive.hpp"

namespace sgshell::cli {

enum class TaskKind { Energy, Resultants, Example, SolveZeta, Converge };
enum class ConvergeKind { Stored, Kinetic, Koiter3Term };

std::string_view to_string(TaskKind kind);
std::string_view to_string(ConvergeKind kind);
TaskKind parse_task_kind(const std::string& name);
ConvergeKind parse_converge_kind(const std::string& name);

struct GeometryBlock {
  std::string chart = "plate";
  ChartParameters params;
};

/// How the deformed chart is built from the reference chart for the
/// energy and resultants tasks.
struct DeformationBlock {
  std::string kind = "identity";  // identity | stretch | displace
  double stretch = 1.0;
  double amplitude = 0.0;
};

struct TaskBlock {
  TaskKind kind = TaskKind::Energy;
  ExampleKind example = ExampleKind::RolledPlate;
  ConvergeKind converge = ConvergeKind::Stored;
  std::string family = "plate";
  GradientModel model = GradientModel::Dilatational;
  std::vector<double> eta{0.9};
  int draws = 0;
  int samples = 3;
  int grid = 5;
};

struct ExampleBlock {
  double R = 1.0;
  double L = 2.0;
  double eta = 0.9;
  double zeta = 1.1;
  double gamma = 0.2;
};

struct NumericsBlock {
  int quad = 6;
  int panels = 2;
  int zeta_order = 8;
  std::vector<double> h_grid{0.16, 0.08, 0.04, 0.02};
  double ell_ratio = 0.5;
  double bending_scale = 1.0;
  std::uint64_t seed = 1;
};

struct OutputBlock {
  std::string dir = ".";
  std::string stem = "sgshell";
};

struct RunConfig {
  MaterialParameters material;
  GeometryBlock geometry;
  DeformationBlock deformation;
  TaskBlock task;
  ExampleBlock example;
  NumericsBlock numerics;
  OutputBlock output;

  /// Every field after defaults are applied; embedded in each report.
  nlohmann::ordered_json resolved() const;
};

/// Parses the INI text. `forced_task` (from the subcommand) fills task.kind;
/// a conflicting task.kind in the file is a ConfigError, as are unknown
/// sections or keys, unparsable numbers and non-positive parameters.
RunConfig parse_config(std::istream& in, std::optional<TaskKind> forced_task = std::nullopt);
RunConfig load_config(const std::string& path, std::optional<TaskKind> forced_task = std::nullopt);

/// Re-checks positivity and consistency after command line overrides.
void validate(const RunConfig& config);

}  // namespace sgshell::cli
