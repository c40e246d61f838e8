#include "commands.hpp"

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lejalab/version.hpp"
#include "svg.hpp"

namespace lejalab::cli {
namespace {

namespace fs = std::filesystem;

const char* kGreenChoices[] = {"auto", "exact", "discrete"};

std::string delta_tag(double delta) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", delta);
  return buf;
}

Json nullable(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

EquilibriumModel equilibrium_for(const SetSpec& set) { return EquilibriumModel::for_set(set); }

double kolmogorov_for(const SetSpec& set, const std::vector<Complex>& row,
                      const EquilibriumModel& model) {
  const auto nu = CountingMeasure::from_row(set, row);
  return set.closed() ? kolmogorov_distance_rotated(nu, model) : kolmogorov_distance(nu, model);
}

Scheme build_scheme(SchemeKind kind, const RunConfig& config) {
  SchemeOptions options;
  options.seed = config.seed;
  options.candidates = config.candidates;
  if (kind == SchemeKind::random && !options.seed) options.seed = 0;
  return Scheme::generate(kind, config.set, config.ns, options);
}

// ---- subcommand bodies ----

struct NodesArgs {
  std::string set;
  std::string kind = "leja";
  std::size_t n = 0;
  std::optional<std::uint64_t> seed;
  std::size_t candidates = 0;
  std::string start = "auto";
  std::string out;
};

void cmd_nodes(const NodesArgs& a) {
  const SetSpec set = load_set(a.set);
  SchemeOptions options;
  options.seed = a.seed;
  options.candidates = a.candidates;
  if (a.start != "auto") {
    std::size_t index = 0;
    try {
      std::size_t used = 0;
      index = std::stoul(a.start, &used);
      if (used != a.start.size()) throw std::invalid_argument(a.start);
    } catch (const std::exception&) {
      throw InvalidInput("--start must be 'auto' or a candidate index, got '" + a.start + "'");
    }
    options.start = index;
  }
  const auto scheme = Scheme::generate(scheme_kind_from_string(a.kind), set, {a.n}, options);
  write_text(a.out, dump(scheme_to_json(scheme, a.n)));
}

struct RowArgs {
  std::string nodes;
  std::optional<std::string> ns;
  std::string out;
};

struct LebesgueArgs : RowArgs {
  std::size_t mesh_factor = 30;
  std::string sproduct;
  std::string delta_ladder;
};

void cmd_lebesgue(const LebesgueArgs& a) {
  const Scheme scheme = load_scheme(a.nodes);
  const auto ns = available_sizes(scheme, a.ns);
  write_text(a.out, lebesgue_table(subexponential_table(scheme, ns, a.mesh_factor)).str());
  if (!a.sproduct.empty()) {
    const auto ladder = a.delta_ladder.empty() ? default_delta_ladder() : parse_reals(a.delta_ladder);
    std::vector<SProductReport> reports;
    for (auto n : ns) {
      const auto row = scheme.row(n);
      for (double delta : ladder) reports.push_back(s_product_min(row, delta, n));
    }
    write_text(a.sproduct, sproduct_table(reports).str());
  }
}

struct SeparationArgs : RowArgs {
  std::string green = "auto";
  std::string rule = "exact";
};

void cmd_separation(const SeparationArgs& a) {
  const Scheme scheme = load_scheme(a.nodes);
  const auto ns = available_sizes(scheme, a.ns);
  std::vector<SeparationReport> reports;
  const bool exact = a.rule == "exact" || a.rule == "both";
  const bool formula = a.rule == "formula" || a.rule == "both";
  std::optional<GreenModel> green;
  if (exact) green = make_green(scheme.set(), a.green);
  for (auto n : ns) {
    const auto row = scheme.row(n);
    if (exact) reports.push_back(separation_ratios(row, *green, n));
    if (formula) reports.push_back(distancing_rule_b(row, scheme.set(), n));
  }
  write_text(a.out, separation_table(reports).str());
}

void cmd_equilibrium(const RowArgs& a) {
  const Scheme scheme = load_scheme(a.nodes);
  const auto ns = available_sizes(scheme, a.ns);
  const auto model = equilibrium_for(scheme.set());
  CsvTable table({"n", "kolmogorov", "spacing_stat", "holder_stat"});
  for (auto n : ns) {
    const auto row = scheme.row(n);
    table.add({std::to_string(n), format_number(kolmogorov_for(scheme.set(), row, model)),
               format_number(spacing_statistic(row, model, n)),
               format_number(holder_statistic(model, row))});
  }
  write_text(a.out, table.str());
}

struct GreenArgs {
  std::string set;
  std::string green = "auto";
  std::size_t charges = 256;
  std::string delta_ladder;
  std::size_t resolution = 512;
  std::string out;
};

void cmd_green(const GreenArgs& a) {
  const SetSpec set = load_set(a.set);
  const GreenModel model = make_green(set, a.green, a.charges);
  const auto ladder = a.delta_ladder.empty() ? default_delta_ladder() : parse_reals(a.delta_ladder);
  const fs::path dir = a.out;
  Json doc = green_to_json(model);
  Json levels = Json::array();
  for (double delta : ladder) {
    const auto curve = level_curve(model, delta, a.resolution);
    Json lj = level_to_json(curve);
    const std::string csv = "level_" + delta_tag(delta) + ".csv";
    lj["csv"] = csv;
    write_text(dir / csv, level_table(curve).str());
    levels.push_back(std::move(lj));
  }
  doc["levels"] = std::move(levels);
  write_text(dir / "green.json", dump(doc));
}

void write_error(std::ostream& err, ExitCode code, const std::string& kind,
                 const std::string& message) {
  Json j;
  j["error"] = kind;
  j["message"] = message;
  j["exit_code"] = static_cast<int>(code);
  err << j.dump() << "\n";
}

}  // namespace

Json config_to_json(const RunConfig& c) {
  Json j;
  j["set"] = set_to_json(c.set);
  Json kinds = Json::array();
  for (auto k : c.kinds) kinds.push_back(std::string(to_string(k)));
  j["kinds"] = kinds;
  j["ns"] = c.ns;
  j["mesh_factor"] = c.mesh_factor;
  j["delta_ladder"] = c.delta_ladder;
  j["seed"] = c.seed ? Json(*c.seed) : Json(nullptr);
  j["green"] = c.green;
  j["candidates"] = c.candidates;
  return j;
}

RunConfig config_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("config must be a JSON object");
  RunConfig c;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "set") {
        c.set = set_from_json(value);
      } else if (key == "kinds") {
        c.kinds.clear();
        for (const auto& k : value) c.kinds.push_back(scheme_kind_from_string(k.get<std::string>()));
      } else if (key == "ns") {
        c.ns = value.get<std::vector<std::size_t>>();
      } else if (key == "mesh_factor") {
        c.mesh_factor = value.get<std::size_t>();
      } else if (key == "delta_ladder") {
        c.delta_ladder = value.get<std::vector<double>>();
      } else if (key == "seed") {
        if (!value.is_null()) c.seed = value.get<std::uint64_t>();
      } else if (key == "green") {
        c.green = value.get<std::string>();
      } else if (key == "candidates") {
        c.candidates = value.get<std::size_t>();
      } else {
        throw InvalidInput("config: unknown field '" + key + "'");
      }
    }
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("config: ") + e.what());
  }
  return c;
}

void normalize(RunConfig& c) {
  std::sort(c.ns.begin(), c.ns.end());
  c.ns.erase(std::unique(c.ns.begin(), c.ns.end()), c.ns.end());
  if (c.ns.empty() || c.ns.front() == 0) throw InvalidInput("row sizes must be positive");
  if (c.kinds.empty()) throw InvalidInput("at least one scheme kind is required");
  for (auto k : c.kinds) {
    if (k == SchemeKind::user) throw InvalidInput("report cannot generate 'user' schemes");
  }
  if (c.mesh_factor < 10) throw InvalidInput("mesh factor must be at least 10");
  for (double d : c.delta_ladder) {
    if (!(d > 0)) throw InvalidInput("delta ladder entries must be positive");
  }
  if (std::find(std::begin(kGreenChoices), std::end(kGreenChoices), c.green) ==
      std::end(kGreenChoices)) {
    throw InvalidInput("green must be auto, exact or discrete, got '" + c.green + "'");
  }
  validate(c.set);
}

GreenModel make_green(const SetSpec& set, const std::string& method, std::size_t charges) {
  if (method == "auto") return GreenModel::for_set(set);
  if (method == "exact") return GreenModel::exact(set);
  if (method == "discrete") return GreenModel::discrete_leja(set, charges);
  throw InvalidInput("green must be auto, exact or discrete, got '" + method + "'");
}

std::vector<std::size_t> available_sizes(const Scheme& scheme,
                                         const std::optional<std::string>& ns) {
  if (!ns) return {scheme.max_n()};
  const auto sizes = parse_sizes(*ns);
  std::string missing;
  for (auto n : sizes) {
    if (!scheme.has_row(n)) missing += (missing.empty() ? "" : ", ") + std::to_string(n);
  }
  if (!missing.empty()) throw InvalidInput("nodes file has no rows for n = " + missing);
  return sizes;
}

Json run_report(const RunConfig& input) {
  RunConfig config = input;
  normalize(config);
  if (config.out.empty()) throw InvalidInput("report needs an output directory");
  std::error_code ec;
  fs::create_directories(config.out, ec);
  if (ec || !fs::is_directory(config.out)) {
    throw InvalidInput("cannot create output directory '" + config.out.string() + "'");
  }

  const SetSpec& set = config.set;
  const GreenModel green = make_green(set, config.green);
  const EquilibriumModel equilibrium = equilibrium_for(set);
  const bool segment = set.kind == SetKind::segment;

  Json report;
  report["tool"] = "lejalab";
  report["version"] = kVersion;
  report["config"] = config_to_json(config);
  report["green"] = {{"method", std::string(to_string(green.method()))},
                     {"capacity", green.capacity()},
                     {"charges", green.charges().size()}};
  report["equilibrium"] = std::string(to_string(equilibrium.method()));

  std::vector<Series> lambda_plot, ratio_plot, ks_plot;
  Json files = Json::array();
  Json schemes = Json::array();

  for (auto kind : config.kinds) {
    const std::string name(to_string(kind));
    const Scheme scheme = build_scheme(kind, config);

    const std::string nodes_file = "nodes_" + name + ".json";
    write_text(config.out / nodes_file, dump(scheme_to_json(scheme, config.ns.back())));

    const auto lebesgue = subexponential_table(scheme, config.ns, config.mesh_factor);
    std::vector<SeparationReport> separation;
    std::vector<SProductReport> sproducts;
    CsvTable audit({"n", "kolmogorov", "spacing_stat", "holder_stat"});

    Json rows = Json::array();
    Series lambda_series{name, {}}, ratio_series{name, {}}, ks_series{name, {}};
    for (std::size_t i = 0; i < config.ns.size(); ++i) {
      const std::size_t n = config.ns[i];
      const auto row = scheme.row(n);
      const auto& leb = lebesgue[i];
      const double ks = kolmogorov_for(set, row, equilibrium);
      const double spacing = spacing_statistic(row, equilibrium, n);
      const double holder = holder_statistic(equilibrium, row);
      audit.add({std::to_string(n), format_number(ks), format_number(spacing),
                 format_number(holder)});

      Json r;
      r["n"] = n;
      r["lambda"] = leb.lambda;
      r["lambda_root"] = leb.lambda_root;
      r["argmax"] = point_to_json(leb.argmax);
      r["lebesgue_uncertain"] = leb.uncertain;
      r["kolmogorov"] = ks;
      r["spacing_stat"] = spacing;
      r["holder_stat"] = holder;

      if (n >= 2) {
        const auto sep = separation_ratios(row, green, n);
        separation.push_back(sep);
        r["min_ratio"] = sep.min_ratio;
        r["argmin"] = {sep.k, sep.j};
        ratio_series.points.emplace_back(static_cast<double>(n), sep.min_ratio);
        if (segment) {
          const auto rule_b = distancing_rule_b(row, set, n);
          separation.push_back(rule_b);
          r["distancing_ratio"] = rule_b.min_ratio;
        } else {
          r["distancing_ratio"] = nullptr;
        }
      } else {
        r["min_ratio"] = nullptr;
        r["argmin"] = nullptr;
        r["distancing_ratio"] = nullptr;
      }

      Json sp = Json::array();
      for (double delta : config.delta_ladder) {
        auto s = s_product_min(row, delta, n);
        sp.push_back({{"delta", delta},
                      {"k", s.k},
                      {"card_A", s.members.size()},
                      {"log_S", s.log_s},
                      {"S", nullable(s.s_value)},
                      {"s_root", s.s_root}});
        sproducts.push_back(std::move(s));
      }
      r["s_products"] = std::move(sp);
      rows.push_back(std::move(r));

      lambda_series.points.emplace_back(static_cast<double>(n), leb.lambda_root);
      ks_series.points.emplace_back(static_cast<double>(n), ks);
    }

    const std::string leb_file = "lebesgue_" + name + ".csv";
    const std::string sp_file = "sproduct_" + name + ".csv";
    const std::string sep_file = "separation_" + name + ".csv";
    const std::string eq_file = "equilibrium_" + name + ".csv";
    write_text(config.out / leb_file, lebesgue_table(lebesgue).str());
    write_text(config.out / sp_file, sproduct_table(sproducts).str());
    write_text(config.out / sep_file, separation_table(separation).str());
    write_text(config.out / eq_file, audit.str());
    for (const auto& f : {nodes_file, leb_file, sp_file, sep_file, eq_file}) files.push_back(f);

    Json s;
    s["kind"] = name;
    s["seed"] = scheme.seed() ? Json(*scheme.seed()) : Json(nullptr);
    if (kind == SchemeKind::leja) {
      s["candidates"] = scheme.candidates();
      s["start"] = scheme.start_label();
      s["capacity_estimate"] =
          scheme.max_n() >= 2 ? Json(capacity_estimate(scheme.row(scheme.max_n()))) : Json(nullptr);
    }
    s["rows"] = std::move(rows);
    schemes.push_back(std::move(s));

    lambda_plot.push_back(std::move(lambda_series));
    ratio_plot.push_back(std::move(ratio_series));
    ks_plot.push_back(std::move(ks_series));
  }

  write_text(config.out / "lambda_root.svg",
             line_plot("Lebesgue constant growth", "n", "Lambda_n^(1/n)", lambda_plot));
  write_text(config.out / "min_ratio.svg",
             line_plot("Separation", "n", "min |z_k - z_j| / rho_(1/n)(z_k)", ratio_plot));
  write_text(config.out / "kolmogorov.svg",
             line_plot("Distance to equilibrium", "n", "Kolmogorov distance", ks_plot));
  for (const char* f : {"lambda_root.svg", "min_ratio.svg", "kolmogorov.svg"}) files.push_back(f);

  report["schemes"] = std::move(schemes);
  files.push_back("report.json");
  report["files"] = std::move(files);
  write_text(config.out / "report.json", dump(report));
  return report;
}

int run(int argc, const char* const* argv, std::ostream& err) {
  CLI::App app{"Interpolation node schemes on planar sets: Leja points, Lebesgue constants, "
               "Green functions, separation and equilibrium audits."};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  NodesArgs nodes;
  auto* c_nodes = app.add_subcommand("nodes", "Generate a node row and write nodes.json");
  c_nodes->add_option("--set", nodes.set, "Set spec: JSON file or inline object")->required();
  c_nodes->add_option("--kind", nodes.kind, "leja | chebyshev | equispaced | random")
      ->capture_default_str();
  c_nodes->add_option("--n", nodes.n, "Number of nodes")->required();
  c_nodes->add_option("--seed", nodes.seed, "Seed for random rows");
  c_nodes->add_option("--candidates", nodes.candidates, "Leja candidate mesh size (0 = default)");
  c_nodes->add_option("--start", nodes.start, "Leja start: auto or a candidate index")
      ->capture_default_str();
  c_nodes->add_option("--out", nodes.out, "Output file (stdout if omitted)");

  auto add_row_options = [](CLI::App* cmd, RowArgs& a) {
    cmd->add_option("--nodes", a.nodes, "nodes.json written by the nodes command")->required();
    cmd->add_option("--ns", a.ns, "Row sizes, e.g. 8,16 or 8..128 (default: all points)");
    cmd->add_option("--out", a.out, "Output CSV (stdout if omitted)");
  };

  LebesgueArgs leb;
  auto* c_leb = app.add_subcommand("lebesgue", "Lebesgue constants per row size");
  add_row_options(c_leb, leb);
  c_leb->add_option("--mesh-factor", leb.mesh_factor, "Sample mesh size per node")
      ->capture_default_str();
  c_leb->add_option("--sproduct", leb.sproduct, "Also write the neighbour-product CSV here");
  c_leb->add_option("--delta-ladder", leb.delta_ladder, "Comma-separated delta values");

  SeparationArgs sep;
  auto* c_sep = app.add_subcommand("separation", "Separation audit per row size");
  add_row_options(c_sep, sep);
  c_sep->add_option("--green", sep.green, "auto | exact | discrete")->capture_default_str();
  c_sep->add_option("--rule", sep.rule, "exact | formula | both")
      ->check(CLI::IsMember({"exact", "formula", "both"}))
      ->capture_default_str();

  RowArgs eq;
  auto* c_eq = app.add_subcommand("equilibrium", "Distance to the equilibrium measure");
  add_row_options(c_eq, eq);

  GreenArgs gr;
  auto* c_green = app.add_subcommand("green", "Green model and level curves");
  c_green->add_option("--set", gr.set, "Set spec: JSON file or inline object")->required();
  c_green->add_option("--green", gr.green, "auto | exact | discrete")->capture_default_str();
  c_green->add_option("--charges", gr.charges, "Charges of the discrete model")
      ->capture_default_str();
  c_green->add_option("--delta-ladder", gr.delta_ladder, "Comma-separated delta values");
  c_green->add_option("--resolution", gr.resolution, "Level curve resolution")
      ->capture_default_str();
  c_green->add_option("--out", gr.out, "Output directory")->required();

  std::string config_file, set_arg, kinds_arg, ns_arg, ladder_arg, green_arg, out_arg;
  std::size_t mesh_factor = 0, candidates = 0;
  std::uint64_t seed = 0;
  auto* c_report = app.add_subcommand("report", "Run every audit and write report.json");
  auto* o_config = c_report->add_option("--config", config_file, "RunConfig JSON file");
  auto* o_set = c_report->add_option("--set", set_arg, "Set spec: JSON file or inline object");
  auto* o_kind = c_report->add_option("--kind", kinds_arg, "Comma-separated scheme kinds");
  auto* o_ns = c_report->add_option("--ns", ns_arg, "Row sizes, e.g. 8..128");
  auto* o_mesh = c_report->add_option("--mesh-factor", mesh_factor, "Lebesgue mesh factor");
  auto* o_ladder = c_report->add_option("--delta-ladder", ladder_arg, "Comma-separated deltas");
  auto* o_seed = c_report->add_option("--seed", seed, "Seed for random rows");
  auto* o_green = c_report->add_option("--green", green_arg, "auto | exact | discrete");
  auto* o_cand = c_report->add_option("--candidates", candidates, "Leja candidate mesh size");
  c_report->add_option("--out", out_arg, "Output directory")->required();

  try {
    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      if (e.get_exit_code() == 0) return app.exit(e);
      write_error(err, ExitCode::invalid_input, "invalid_input", e.what());
      return static_cast<int>(ExitCode::invalid_input);
    }

    if (c_nodes->parsed()) {
      cmd_nodes(nodes);
    } else if (c_leb->parsed()) {
      cmd_lebesgue(leb);
    } else if (c_sep->parsed()) {
      cmd_separation(sep);
    } else if (c_eq->parsed()) {
      cmd_equilibrium(eq);
    } else if (c_green->parsed()) {
      cmd_green(gr);
    } else if (c_report->parsed()) {
      RunConfig config;
      if (o_config->count()) config = config_from_json(read_json_file(config_file));
      if (o_set->count()) config.set = load_set(set_arg);
      if (o_kind->count()) {
        config.kinds.clear();
        std::string item;
        std::stringstream ss(kinds_arg);
        while (std::getline(ss, item, ',')) config.kinds.push_back(scheme_kind_from_string(item));
      }
      if (o_ns->count()) config.ns = parse_sizes(ns_arg);
      if (o_mesh->count()) config.mesh_factor = mesh_factor;
      if (o_ladder->count()) config.delta_ladder = parse_reals(ladder_arg);
      if (o_seed->count()) config.seed = seed;
      if (o_green->count()) config.green = green_arg;
      if (o_cand->count()) config.candidates = candidates;
      config.out = out_arg;
      run_report(config);
    }
  } catch (const InvalidInput& e) {
    write_error(err, ExitCode::invalid_input, "invalid_input", e.what());
    return static_cast<int>(ExitCode::invalid_input);
  } catch (const NumericalFailure& e) {
    write_error(err, ExitCode::numerical_failure, "numerical_failure", e.what());
    return static_cast<int>(ExitCode::numerical_failure);
  } catch (const std::exception& e) {
    write_error(err, ExitCode::internal, "internal", e.what());
    return static_cast<int>(ExitCode::internal);
  }
  return static_cast<int>(ExitCode::ok);
}

int run(const std::vector<std::string>& args, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("lejalab");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), err);
}

}  // namespace lejalab::cli
