#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "qudit/cli.hpp"
#include "qudit/errors.hpp"
#include "qudit/geometry.hpp"
#include "qudit/hamiltonian.hpp"
#include "qudit/representations.hpp"
#include "qudit/thermal.hpp"

namespace qudit::cli {
namespace {

using json = nlohmann::ordered_json;

struct Common {
  std::string format = "csv";
  std::string out;
  long long seed = 0;
  bool validate = false;
};

// What a command produced: the table plus sidecar extras.
struct Dataset {
  Table table;
  json extra = json::object();
  std::vector<Discrepancy> discrepancies;
};

struct ModelOptions {
  std::string model = "linear";
  double j = 1.0;
  double omega = 1.0;
  double gx = 0.0;
  double gy = 0.0;
  std::optional<double> gminus;
  std::optional<double> gplus;
};

std::vector<std::string> state_columns(int n) {
  std::vector<std::string> cols;
  for (int i = 1; i <= n; ++i) cols.push_back("p" + std::to_string(i));
  for (int l = 1; l < n; ++l) cols.push_back("l" + std::to_string(n * n - n + l));
  for (int ell = 2; ell <= n; ++ell) cols.push_back("t" + std::to_string(ell));
  return cols;
}

void append_state(std::vector<double>& row, const Vector& p) {
  const Vector lambda = p_to_lambda(p);
  const Vector t = invariants(p);
  row.insert(row.end(), p.begin(), p.end());
  row.insert(row.end(), lambda.begin(), lambda.end());
  row.insert(row.end(), t.begin(), t.end());
}

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

void add_common(CLI::App* sub, Common& common) {
  sub->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub->add_option("--out", common.out, "Output path (stdout when omitted)");
  sub->add_option("--seed", common.seed, "Reserved; no command draws random numbers")
      ->capture_default_str();
  sub->add_flag("--validate", common.validate,
                "Re-read the written file and re-check every physical row");
}

void add_model(CLI::App* sub, ModelOptions& m, bool lmg_only) {
  if (lmg_only) {
    m.model = "lmg";
    sub->add_option("--model", m.model, "Hamiltonian model")
        ->check(CLI::IsMember({"lmg"}))
        ->capture_default_str();
  } else {
    sub->add_option("--model", m.model, "Hamiltonian model")
        ->check(CLI::IsMember({"linear", "lmg"}))
        ->capture_default_str();
  }
  sub->add_option("--J", m.j, "Spin J (n = 2J + 1 levels)")->capture_default_str();
  sub->add_option("--omega", m.omega, "Energy scale omega")->capture_default_str();
  if (!lmg_only) {
    sub->add_option("--gx", m.gx, "LMG coupling g_x")->capture_default_str();
    sub->add_option("--gy", m.gy, "LMG coupling g_y")->capture_default_str();
    sub->add_option("--gminus", m.gminus, "LMG coupling g_- = g_x - g_y");
    sub->add_option("--gplus", m.gplus, "LMG coupling g_+ = g_x + g_y");
  }
}

LMGParams lmg_params(const ModelOptions& m) {
  if (m.gminus.has_value() != m.gplus.has_value()) {
    throw ConfigError("--gminus and --gplus must be given together");
  }
  if (m.gminus) return LMGParams::from_pm(m.omega, *m.gminus, *m.gplus);
  return LMGParams{m.omega, m.gx, m.gy};
}

Spectrum build_spectrum(const ModelOptions& m) {
  if (!std::isfinite(m.omega) || !(m.omega > 0.0)) throw ConfigError("--omega must be > 0");
  if (m.model == "linear") return linear_spectrum(m.j, m.omega);
  return lmg_spectrum(m.j, lmg_params(m));
}

// p in the spectrum's original label order for every beta of the grid.
std::vector<Vector> thermal_states(const Spectrum& spectrum, const std::vector<double>& grid) {
  const auto traj = trajectory(spectrum, grid);
  std::vector<Vector> states;
  states.reserve(traj.samples.size());
  for (const auto& s : traj.samples) states.push_back(spectrum.to_label_order(s.p.values()));
  return states;
}

Dataset cmd_frame(int n) {
  require_dimension(n);
  Dataset d;
  d.table.columns = concat({"point"}, state_columns(n));
  d.table.columns.push_back("physical");
  json names = json::array();
  for (int k = 0; k <= n; ++k) {
    Vector p = Vector::Constant(n, 1.0 / n);
    if (k < n) {
      p.setZero();
      p[k] = 1.0;
      names.push_back("v" + std::to_string(k + 1));
    } else {
      names.push_back("pe");
    }
    std::vector<double> row{static_cast<double>(k)};
    append_state(row, p);
    row.push_back(1.0);
    d.table.add(std::move(row));
  }
  auto matrix_json = [](const Matrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      rows.push_back(std::vector<double>(m.row(i).begin(), m.row(i).end()));
    }
    return rows;
  };
  d.extra["points"] = names;
  d.extra["transform_matrix"] = matrix_json(transform_matrix(n));
  d.extra["inverse_transform_matrix"] = matrix_json(inverse_transform_matrix(n));
  return d;
}

Dataset cmd_map(int n, const std::string& p_spec, const std::string& lambda_spec) {
  require_dimension(n);
  if (p_spec.empty() == lambda_spec.empty()) {
    throw ConfigError("give exactly one of --p or --lambda");
  }
  Vector p;
  bool physical = true;
  if (!p_spec.empty()) {
    const auto values = parse_list(p_spec);
    if (static_cast<int>(values.size()) != n) {
      throw ConfigError("--p needs " + std::to_string(n) + " values");
    }
    p = ProbabilityVector(Eigen::Map<const Vector>(values.data(), n)).values();
  } else {
    const auto values = parse_list(lambda_spec);
    if (static_cast<int>(values.size()) != n - 1) {
      throw ConfigError("--lambda needs " + std::to_string(n - 1) + " values");
    }
    p = lambda_to_p(Vector(Eigen::Map<const Vector>(values.data(), n - 1)));
    physical = on_simplex(p);
  }
  Dataset d;
  d.table.columns = state_columns(n);
  d.table.columns.push_back("physical");
  std::vector<double> row;
  append_state(row, p);
  row.push_back(physical ? 1.0 : 0.0);
  d.table.add(std::move(row));
  return d;
}

Dataset cmd_thermal(const ModelOptions& m, const std::string& grid_spec) {
  const auto spectrum = build_spectrum(m);
  const auto grid = parse_beta_grid(grid_spec);
  const int n = spectrum.n();
  Dataset d;
  d.table.columns = concat({"beta"}, state_columns(n));
  d.table.columns.push_back("physical");
  const auto states = thermal_states(spectrum, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::vector<double> row{grid[i]};
    append_state(row, states[i]);
    row.push_back(1.0);
    d.table.add(std::move(row));
  }
  const Vector labelled = spectrum.to_label_order(
      Eigen::Map<const Vector>(spectrum.energies().data(), n));
  d.extra["levels"] = std::vector<double>(labelled.begin(), labelled.end());
  if (!spectrum.names().empty()) d.extra["level_names"] = spectrum.names();
  return d;
}

Dataset cmd_phase(const ModelOptions& m, double beta, const std::string& gm_spec,
                  const std::string& gp_spec, const std::string& gx_spec,
                  const std::string& gy_spec) {
  if (!std::isfinite(m.omega) || !(m.omega > 0.0)) throw ConfigError("--omega must be > 0");
  const bool pm = !gm_spec.empty() || !gp_spec.empty();
  const bool xy = !gx_spec.empty() || !gy_spec.empty();
  if (pm == xy) throw ConfigError("give either --gminus/--gplus or --gx/--gy ranges");
  std::vector<LMGParams> grid;
  if (pm) {
    if (gm_spec.empty() || gp_spec.empty()) throw ConfigError("--gminus and --gplus are both required");
    grid = pm_grid(m.omega, parse_range(gm_spec), parse_range(gp_spec));
  } else {
    if (gx_spec.empty() || gy_spec.empty()) throw ConfigError("--gx and --gy are both required");
    grid = xy_grid(m.omega, parse_range(gx_spec), parse_range(gy_spec));
  }
  for (const auto& g : grid) {
    if (!std::isfinite(g.gx) || !std::isfinite(g.gy)) throw ConfigError("couplings must be finite");
  }
  const auto samples = phase_sweep(m.j, grid, beta);
  const int n = twice_spin(m.j) + 1;

  Dataset d;
  d.table.columns = {"gminus", "gplus", "gx", "gy"};
  for (int i = 1; i <= n; ++i) d.table.columns.push_back("E" + std::to_string(i));
  d.table.columns = concat(d.table.columns, state_columns(n));
  d.table.columns.push_back("region");
  d.table.columns.push_back("physical");
  for (const auto& s : samples) {
    std::vector<double> row{s.params.g_minus(), s.params.g_plus(), s.params.gx, s.params.gy};
    row.insert(row.end(), s.levels.begin(), s.levels.end());
    append_state(row, s.p.values());
    row.push_back(s.region.region ? static_cast<double>(static_cast<int>(*s.region.region) + 1)
                                  : 0.0);
    row.push_back(1.0);
    d.table.add(std::move(row));
  }
  d.extra["region_codes"] = {{"0", "separatrix"}, {"1", "I"}, {"2", "II"}, {"3", "III"}};
  return d;
}

void add_curves(Dataset& d, const std::vector<ParamCurve>& curves, const char* param) {
  const int n = curves.empty() ? 0 : static_cast<int>(curves.front().points.cols());
  d.table.columns = concat({"curve", param}, state_columns(n));
  d.table.columns.push_back("physical");
  json labels = json::array();
  for (std::size_t c = 0; c < curves.size(); ++c) {
    const auto& curve = curves[c];
    labels.push_back(curve.label);
    for (Eigen::Index i = 0; i < curve.size(); ++i) {
      std::vector<double> row{static_cast<double>(c), curve.parameter[static_cast<std::size_t>(i)]};
      append_state(row, curve.points.row(i).transpose());
      row.push_back(curve.physical[static_cast<std::size_t>(i)] ? 1.0 : 0.0);
      d.table.add(std::move(row));
    }
  }
  d.extra["curves"] = labels;
}

void add_meshes(Dataset& d, const std::vector<SurfaceMesh>& meshes, const char* u,
                const char* v) {
  const int n = meshes.empty() ? 0 : static_cast<int>(meshes.front().points.cols());
  d.table.columns = concat({"surface", u, v, "radius"}, state_columns(n));
  d.table.columns.push_back("physical");
  json labels = json::array();
  for (std::size_t s = 0; s < meshes.size(); ++s) {
    const auto& mesh = meshes[s];
    labels.push_back(mesh.label);
    const auto nv = mesh.v.size();
    for (Eigen::Index i = 0; i < mesh.size(); ++i) {
      const auto k = static_cast<std::size_t>(i);
      std::vector<double> row{static_cast<double>(s), mesh.u[k / nv], mesh.v[k % nv],
                              mesh.radius.empty() ? std::nan("") : mesh.radius[k]};
      append_state(row, mesh.points.row(i).transpose());
      row.push_back(mesh.physical[k] ? 1.0 : 0.0);
      d.table.add(std::move(row));
    }
  }
  d.extra["surfaces"] = labels;
}

struct LocusOptions {
  int n = 3;
  std::optional<double> t2;
  std::optional<double> t3;
  std::optional<double> t4;
  bool edges = false;
  bool medians = false;
  bool planes = false;
  int samples = kCurveSamples;
  int theta_samples = kSurfaceThetaSamples;
  int phi_samples = kSurfacePhiSamples;
};

Dataset cmd_locus(const LocusOptions& o) {
  const int chosen = int(o.t2.has_value()) + int(o.t3.has_value()) + int(o.t4.has_value()) +
                     int(o.edges) + int(o.medians) + int(o.planes);
  if (chosen != 1) {
    throw ConfigError("give exactly one of --t2, --t3, --t4, --edges, --medians, --planes");
  }
  Dataset d;
  if (o.edges) {
    add_curves(d, simplex_edges(o.n, o.samples), "x");
  } else if (o.medians) {
    if (o.n != 3) throw ConfigError("--medians needs --n 3; use --planes for n = 4");
    add_curves(d, simplex_medians(o.samples), "x");
  } else if (o.planes) {
    if (o.n != 4) throw ConfigError("--planes needs --n 4");
    add_meshes(d, equal_pair_planes(o.theta_samples, o.phi_samples), "u", "v");
  } else if (o.n != 3 && o.n != 4) {
    throw ConfigError("constant-invariant loci need --n 3 or --n 4");
  } else if (o.t2) {
    auto locus = constant_t2_locus(o.n, *o.t2, o.samples, o.theta_samples, o.phi_samples);
    if (auto* curve = std::get_if<ParamCurve>(&locus)) {
      add_curves(d, {*curve}, "alpha");
    } else {
      add_meshes(d, {std::get<SurfaceMesh>(locus)}, "theta", "phi");
    }
  } else if (o.n == 3) {
    if (o.t4) throw ConfigError("--t4 needs --n 4");
    add_curves(d, {constant_t3_locus_qutrit(*o.t3, o.samples)}, "alpha");
  } else {
    const auto which = o.t3 ? Invariant::T3 : Invariant::T4;
    add_meshes(d,
               {constant_invariant_surface_ququart(which, o.t3 ? *o.t3 : *o.t4,
                                                   o.theta_samples, o.phi_samples)},
               "theta", "phi");
  }
  return d;
}

Dataset cmd_boundary(int samples) {
  const auto boundary = t_space_boundary_qutrit(samples);
  auto images = lambda_segment_images(samples);
  std::vector<const ParamCurve*> curves{&boundary.upper, &boundary.lower,
                                        &boundary.zero_eigenvalue};
  for (const auto& c : images.curves) curves.push_back(&c);

  Dataset d;
  d.table.columns = {"curve", "param", "t2", "t3", "physical"};
  json labels = json::array();
  for (std::size_t c = 0; c < curves.size(); ++c) {
    labels.push_back(curves[c]->label);
    for (Eigen::Index i = 0; i < curves[c]->size(); ++i) {
      d.table.add({static_cast<double>(c), curves[c]->parameter[static_cast<std::size_t>(i)],
                   curves[c]->points(i, 0), curves[c]->points(i, 1),
                   curves[c]->physical[static_cast<std::size_t>(i)] ? 1.0 : 0.0});
    }
  }
  d.extra["curves"] = labels;
  d.extra["junction_t2"] = boundary.junction;
  d.discrepancies = std::move(images.discrepancies);
  return d;
}

Dataset cmd_flower(const ModelOptions& m, const std::string& grid_spec) {
  const auto spectrum = build_spectrum(m);
  const auto grid = parse_beta_grid(grid_spec);
  const auto states = thermal_states(spectrum, grid);
  ParamCurve curve;
  curve.label = "thermal";
  curve.points.resize(static_cast<Eigen::Index>(states.size()), spectrum.n());
  for (std::size_t i = 0; i < states.size(); ++i) {
    curve.points.row(static_cast<Eigen::Index>(i)) = states[i].transpose();
  }
  curve.parameter = grid;
  curve.physical.assign(grid.size(), true);
  Dataset d;
  add_curves(d, permutation_images(curve), "beta");
  return d;
}

std::string option_value(const CLI::Option* opt) {
  if (opt->count() == 0) return opt->get_default_str();
  std::string joined;
  for (const auto& r : opt->results()) joined += (joined.empty() ? "" : ",") + r;
  return joined;
}

json config_echo(const CLI::App* sub) {
  json cfg = json::object();
  cfg["command"] = sub->get_name();
  for (const auto* opt : sub->get_options()) {
    if (opt->get_name() == "--help") continue;
    const std::string name = opt->get_name().substr(opt->get_name().find_first_not_of('-'));
    if (opt->get_expected_max() == 0 || opt->get_type_size_max() == 0) {
      cfg[name] = opt->count() > 0;
    } else if (opt->count() == 0 && opt->get_default_str().empty()) {
      cfg[name] = nullptr;
    } else {
      cfg[name] = option_value(opt);
    }
  }
  return cfg;
}

void write_table(std::ostream& os, const Table& table, Format format) {
  if (format == Format::Json) {
    write_json(os, table);
  } else {
    write_csv(os, table);
  }
}

void write_atomic(const std::filesystem::path& path,
                  const std::function<void(std::ostream&)>& body) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("cannot open " + tmp.string() + " for writing");
    body(os);
    os.flush();
    if (!os) throw IoError("write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("cannot move " + tmp.string() + " to " + path.string() + ": " + ec.message());
}

void report_error(std::ostream& err, const char* kind, const std::string& message) {
  err << json{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Geometry of diagonal qudit states: frames, maps, thermal trajectories, "
               "LMG phase diagrams and invariant loci",
               "qudit-geom"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Common common;
  ModelOptions model;
  ModelOptions phase_model;
  int frame_n = 3;
  int map_n = 3;
  std::string map_p;
  std::string map_lambda;
  std::string beta_grid = "0,log:1e-3:1e3:200";
  std::string flower_grid = "0,log:1e-3:1e3:200";
  double phase_beta = 1.0;
  std::string gm_range;
  std::string gp_range;
  std::string gx_range;
  std::string gy_range;
  LocusOptions locus;
  int boundary_samples = kCurveSamples;

  auto* frame = app.add_subcommand("frame", "Simplex vertices, centre and the p <-> lambda matrices");
  frame->add_option("--n", frame_n, "Dimension")->capture_default_str();
  add_common(frame, common);

  auto* map = app.add_subcommand("map", "Map one point between p-, lambda- and t-space");
  map->add_option("--n", map_n, "Dimension")->capture_default_str();
  map->add_option("--p", map_p, "Comma-separated probabilities");
  map->add_option("--lambda", map_lambda, "Comma-separated diagonal Bloch coefficients");
  add_common(map, common);

  auto* thermal = app.add_subcommand("thermal", "Thermal trajectory over a beta grid");
  add_model(thermal, model, false);
  thermal->add_option("--beta-grid", beta_grid, "Beta grid spec")->capture_default_str();
  add_common(thermal, common);

  auto* phase = app.add_subcommand("phase-diagram", "LMG thermal states over a coupling grid");
  add_model(phase, phase_model, true);
  phase->add_option("--beta", phase_beta, "Inverse temperature (inf allowed)")
      ->capture_default_str();
  phase->add_option("--gminus", gm_range, "g_- range lo:hi:count");
  phase->add_option("--gplus", gp_range, "g_+ range lo:hi:count");
  phase->add_option("--gx", gx_range, "g_x range lo:hi:count");
  phase->add_option("--gy", gy_range, "g_y range lo:hi:count");
  add_common(phase, common);

  auto* locus_cmd = app.add_subcommand("locus", "Simplex edges, medians and constant-invariant loci");
  locus_cmd->add_option("--n", locus.n, "Dimension")->capture_default_str();
  locus_cmd->add_option("--t2", locus.t2, "Constant purity");
  locus_cmd->add_option("--t3", locus.t3, "Constant t3");
  locus_cmd->add_option("--t4", locus.t4, "Constant t4 (n = 4)");
  locus_cmd->add_flag("--edges", locus.edges, "Simplex edges");
  locus_cmd->add_flag("--medians", locus.medians, "Qutrit medians");
  locus_cmd->add_flag("--planes", locus.planes, "Ququart equal-pair planes");
  locus_cmd->add_option("--samples", locus.samples, "Samples per curve")->capture_default_str();
  locus_cmd->add_option("--theta-samples", locus.theta_samples, "Surface samples in theta (u)")
      ->capture_default_str();
  locus_cmd->add_option("--phi-samples", locus.phi_samples, "Surface samples in phi (v)")
      ->capture_default_str();
  add_common(locus_cmd, common);

  auto* boundary = app.add_subcommand("boundary", "Qutrit t-space boundary and segment images");
  boundary->add_option("--samples", boundary_samples, "Samples per curve")->capture_default_str();
  add_common(boundary, common);

  auto* flower = app.add_subcommand("flower", "Permutation copies of a thermal trajectory");
  add_model(flower, model, false);
  flower->add_option("--beta-grid", flower_grid, "Beta grid spec")->capture_default_str();
  add_common(flower, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    report_error(err, "config", e.what());
    return kConfigError;
  }

  CLI::App* active = app.get_subcommands().front();
  Dataset data;
  try {
    if (common.validate && common.out.empty()) throw ConfigError("--validate needs --out");
    if (active == frame) {
      data = cmd_frame(frame_n);
    } else if (active == map) {
      data = cmd_map(map_n, map_p, map_lambda);
    } else if (active == thermal) {
      data = cmd_thermal(model, beta_grid);
    } else if (active == phase) {
      data = cmd_phase(phase_model, phase_beta, gm_range, gp_range, gx_range, gy_range);
    } else if (active == locus_cmd) {
      data = cmd_locus(locus);
    } else if (active == boundary) {
      data = cmd_boundary(boundary_samples);
    } else {
      data = cmd_flower(model, flower_grid);
    }
  } catch (const ConfigError& e) {
    report_error(err, "config", e.what());
    return kConfigError;
  } catch (const qudit::Error& e) {
    report_error(err, "config", e.what());
    return kConfigError;
  } catch (const std::exception& e) {
    report_error(err, "numerical", e.what());
    return kNumericalError;
  }

  const int physical_col = data.table.column("physical");
  std::size_t physical = 0;
  std::size_t failed = 0;
  for (const auto& row : data.table.rows) {
    if (physical_col >= 0 && row[static_cast<std::size_t>(physical_col)] == 1.0) ++physical;
    bool finite = true;
    for (double v : row) finite = finite && !std::isnan(v);
    if (!finite) ++failed;
  }
  const Format format = common.format == "json" ? Format::Json : Format::Csv;

  json meta;
  meta["tool"] = "qudit-geom";
  meta["version"] = kVersion;
  meta["config"] = config_echo(active);
  meta["columns"] = data.table.columns;
  meta["counts"] = {{"rows", data.table.rows.size()},
                    {"physical", physical},
                    {"masked", data.table.rows.size() - physical},
                    {"failed", failed}};
  json discrepancies = json::array();
  for (const auto& dsc : data.discrepancies) {
    discrepancies.push_back({{"curve", dsc.curve},
                             {"component", dsc.component == 0 ? "t2" : "t3"},
                             {"printed", dsc.printed},
                             {"oracle", dsc.oracle},
                             {"max_deviation", dsc.max_deviation}});
  }
  meta["discrepancies"] = discrepancies;
  for (auto& [key, value] : data.extra.items()) meta[key] = value;

  try {
    if (common.out.empty()) {
      write_table(out, data.table, format);
    } else {
      const std::filesystem::path path(common.out);
      write_atomic(path, [&](std::ostream& os) { write_table(os, data.table, format); });
      auto meta_path = path;
      meta_path += ".meta.json";
      write_atomic(meta_path, [&](std::ostream& os) { os << meta.dump(2) << '\n'; });
    }
  } catch (const IoError& e) {
    report_error(err, "io", e.what());
    return kIoError;
  }

  if (!data.table.rows.empty() && failed == data.table.rows.size()) {
    report_error(err, "numerical", "every node failed; nothing usable was produced");
    return kNumericalError;
  }

  if (common.validate) {
    Table reread;
    try {
      std::ifstream is(common.out, std::ios::binary);
      if (!is) throw IoError("cannot reopen " + common.out);
      reread = format == Format::Json ? read_json(is) : read_csv(is);
    } catch (const IoError& e) {
      report_error(err, "io", e.what());
      return kIoError;
    } catch (const std::exception& e) {
      report_error(err, "io", std::string("cannot parse ") + common.out + ": " + e.what());
      return kIoError;
    }
    if (reread.columns != data.table.columns) {
      report_error(err, "validation", "column schema differs after re-reading");
      return kNumericalError;
    }
    const auto report = validate_table(reread);
    if (report.failures > 0) {
      report_error(err, "validation",
                   std::to_string(report.failures) + " physical rows failed; " +
                       report.first_failure);
      return kNumericalError;
    }
    err << json{{"validated", common.out},
                {"rows", report.rows},
                {"physical_rows", report.physical_rows}}
               .dump()
        << '\n';
  }
  return kSuccess;
}

}  // namespace qudit::cli
