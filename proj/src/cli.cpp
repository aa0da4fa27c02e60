#include "mwrc/cli.hpp"

#include "mwrc/errors.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string_view>

namespace mwrc::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr std::pair<Command, std::string_view> kCommands[] = {
    {Command::Rate, "rate"},
    {Command::EeSolve, "ee-solve"},
    {Command::Sweep, "sweep"},
    {Command::Crossing, "crossing"},
};

constexpr std::pair<SweepKind, std::string_view> kKinds[] = {
    {SweepKind::SpectralVsSnr, "spectral"},
    {SweepKind::EeVsPmax, "ee"},
    {SweepKind::EeVsCircuitPower, "circuit"},
};

constexpr std::pair<TableFormat, std::string_view> kFormats[] = {
    {TableFormat::Dat, "dat"},
    {TableFormat::Csv, "csv"},
    {TableFormat::Json, "json"},
};

template <typename E, std::size_t K>
std::string_view name_of(const std::pair<E, std::string_view> (&table)[K], E v) {
  for (const auto &[e, name] : table)
    if (e == v)
      return name;
  return "?";
}

template <typename E, std::size_t K>
E value_of(const std::pair<E, std::string_view> (&table)[K],
           std::string_view name, std::string_view what) {
  for (const auto &[e, n] : table)
    if (n == name)
      return e;
  throw ConfigError("unknown " + std::string(what) + " '" + std::string(name) + "'");
}

Scheme scheme_of(std::string_view name) {
  if (auto s = parse_scheme(name))
    return *s;
  throw ConfigError("unknown scheme '" + std::string(name) +
                    "' (expected bound, af, df, nnc-snd or nnc-ian)");
}

double number_of(const json &v, std::string_view key) {
  if (!v.is_number())
    throw ConfigError("config key '" + std::string(key) + "' must be a number");
  return v.get<double>();
}

std::string string_of(const json &v, std::string_view key) {
  if (!v.is_string())
    throw ConfigError("config key '" + std::string(key) + "' must be a string");
  return v.get<std::string>();
}

int int_of(const json &v, std::string_view key) {
  if (!v.is_number_integer())
    throw ConfigError("config key '" + std::string(key) + "' must be an integer");
  return v.get<int>();
}

BoxDomain box_of(const RunConfig &cfg) {
  return {cfg.pmax, cfg.p0max.value_or(cfg.pmax)};
}

SweepSpec sweep_spec_of(const RunConfig &cfg) {
  SweepSpec spec = default_sweep_spec(cfg.kind);
  if (cfg.from)
    spec.x_start = *cfg.from;
  if (cfg.to)
    spec.x_stop = *cfg.to;
  if (cfg.step)
    spec.x_step = *cfg.step;
  if (!cfg.schemes.empty())
    spec.schemes = cfg.schemes;
  spec.N = cfg.channel.N;
  spec.N0 = cfg.channel.N0;
  spec.power = cfg.power;
  spec.box = box_of(cfg);
  spec.settings = cfg.settings;
  return spec;
}

std::vector<Scheme> schemes_or_all(const RunConfig &cfg) {
  if (!cfg.schemes.empty())
    return cfg.schemes;
  return {kAllSchemes.begin(), kAllSchemes.end()};
}

// Header line plus one or more rows, in dat/csv/json.
struct Record {
  std::vector<std::string> labels;
  std::vector<std::vector<json>> rows;
};

std::string cell_text(const json &v) {
  if (v.is_string())
    return v.get<std::string>();
  if (v.is_boolean())
    return v.get<bool>() ? "1" : "0";
  if (v.is_number_integer())
    return std::to_string(v.get<long long>());
  return format_number(v.get<double>());
}

void write_record(std::ostream &os, const Record &r, TableFormat format) {
  if (format == TableFormat::Json) {
    json rows = json::array();
    for (const auto &row : r.rows) {
      json obj = json::object();
      for (std::size_t k = 0; k < r.labels.size(); ++k)
        obj[r.labels[k]] = row[k].is_number_float()
                               ? json(std::stod(format_number(row[k].get<double>())))
                               : row[k];
      rows.push_back(std::move(obj));
    }
    os << (rows.size() == 1 ? rows[0] : rows).dump(2) << '\n';
    return;
  }
  const char sep = format == TableFormat::Csv ? ',' : ' ';
  auto line = [&](const auto &cells, auto &&text) {
    for (std::size_t k = 0; k < cells.size(); ++k)
      os << (k ? std::string(1, sep) : std::string()) << text(cells[k]);
    os << '\n';
  };
  line(r.labels, [](const std::string &s) { return s; });
  for (const auto &row : r.rows)
    line(row, cell_text);
}

void run_rate(const RunConfig &cfg, std::ostream &os) {
  const std::vector<Scheme> schemes = schemes_or_all(cfg);
  if (schemes.size() == 1 && cfg.format == TableFormat::Dat) {
    os << format_number(sum_rate(schemes.front(), cfg.channel)) << '\n';
    return;
  }
  Record r;
  r.rows.emplace_back();
  for (Scheme s : schemes) {
    r.labels.emplace_back(scheme_name(s));
    r.rows.back().emplace_back(sum_rate(s, cfg.channel));
  }
  write_record(os, r, cfg.format);
}

void run_ee_solve(const RunConfig &cfg, std::ostream &os) {
  const BoxDomain box = box_of(cfg);
  Record r;
  r.labels = {"scheme", "P_opt", "P0_opt", "EE", "iterations", "converged"};
  std::string failed;
  for (Scheme s : schemes_or_all(cfg)) {
    const OptResult res = solve_ee(s, cfg.channel.N, cfg.channel.N0, cfg.power,
                                   box, cfg.settings, cfg.p0_init);
    if (!res.converged)
      failed += (failed.empty() ? "" : ", ") + std::string(scheme_name(s)) +
                " after " + std::to_string(res.outer_iterations) + " iterations";
    r.rows.push_back({json(std::string(scheme_name(s))), json(res.P_opt),
                      json(res.P0_opt), json(res.ee_value),
                      json(res.outer_iterations), json(res.converged)});
  }
  if (!failed.empty())
    throw NonConvergence("EE solver did not converge: " + failed);
  write_record(os, r, cfg.format);
}

void run_sweep_command(const RunConfig &cfg, std::ostream &os) {
  write_table(os, run_sweep(sweep_spec_of(cfg)), cfg.format);
}

void run_crossing(const RunConfig &cfg, std::ostream &os) {
  SweepSpec spec = sweep_spec_of(cfg);
  if (cfg.schemes.empty()) {
    spec.schemes = cfg.kind == SweepKind::SpectralVsSnr
                       ? std::vector<Scheme>{Scheme::DF, Scheme::NncSnd}
                       : std::vector<Scheme>{Scheme::DF, Scheme::AF};
  }
  const Scheme a = spec.schemes[0];
  const Scheme b = spec.schemes[1];
  const SweepTable table = run_sweep(spec);
  const auto crossing =
      find_crossing(table, column_label(spec.kind, a), column_label(spec.kind, b),
                    sweep_difference(spec, a, b));

  Record r;
  r.labels = {"found", "x_cross", "left", "right", "refined"};
  const json left = column_label(spec.kind, a);
  const json right = column_label(spec.kind, b);
  if (crossing)
    r.rows.push_back({json(true), json(crossing->x_cross), left, right,
                      json(crossing->refined)});
  else
    r.rows.push_back({json(false), json(nullptr), left, right, json(false)});
  if (cfg.format != TableFormat::Json && !crossing) {
    // No numeric x to print.
    r.rows.back()[1] = json("nan");
  }
  write_record(os, r, cfg.format);
}

std::string_view find_config_path(int argc, const char *const *argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string_view arg = argv[i];
    if (arg == "--config") {
      if (i + 1 >= argc)
        throw ConfigError("--config needs a path");
      return argv[i + 1];
    }
    if (arg.starts_with("--config="))
      return arg.substr(9);
  }
  return {};
}

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void error_line(std::ostream &err, std::string_view kind, std::string_view msg) {
  json j;
  j["error"] = kind;
  j["message"] = msg;
  err << j.dump() << '\n';
}

} // namespace

void RunConfig::validate() const {
  try {
    channel.validate();
    power.validate();
    box_of(*this).validate();
    settings.validate();
  } catch (const DomainError &e) {
    throw ConfigError(e.what());
  }
  if (p0_init && (!std::isfinite(*p0_init) || *p0_init < 0.0 ||
                  *p0_init > box_of(*this).P0max))
    throw ConfigError("p0-init must lie in [0, p0max]");
  for (const auto &v : {from, to, step})
    if (v && !std::isfinite(*v))
      throw ConfigError("sweep bounds must be finite");
  if (step && !(*step > 0.0))
    throw ConfigError("step must be positive");
  if (command == Command::Crossing && !schemes.empty() && schemes.size() != 2)
    throw ConfigError("crossing needs exactly two schemes");
  if (command == Command::Sweep || command == Command::Crossing) {
    SweepSpec spec = sweep_spec_of(*this);
    if (command == Command::Crossing && schemes.empty())
      spec.schemes = {Scheme::DF, Scheme::AF};
    spec.validate();
  }
}

std::string save_config(const RunConfig &cfg) {
  json j;
  j["command"] = name_of(kCommands, cfg.command);
  json schemes = json::array();
  for (Scheme s : cfg.schemes)
    schemes.push_back(scheme_name(s));
  j["scheme"] = schemes;
  j["p"] = cfg.channel.P;
  j["p0"] = cfg.channel.P0;
  j["n"] = cfg.channel.N;
  j["n0"] = cfg.channel.N0;
  j["phi"] = cfg.power.phi;
  j["psi"] = cfg.power.psi;
  j["pc"] = cfg.power.Pc;
  j["pmax"] = cfg.pmax;
  if (cfg.p0max)
    j["p0max"] = *cfg.p0max;
  if (cfg.p0_init)
    j["p0-init"] = *cfg.p0_init;
  j["kind"] = name_of(kKinds, cfg.kind);
  if (cfg.from)
    j["from"] = *cfg.from;
  if (cfg.to)
    j["to"] = *cfg.to;
  if (cfg.step)
    j["step"] = *cfg.step;
  j["tol-dinkelbach"] = cfg.settings.dinkelbach_tol;
  j["tol-am"] = cfg.settings.am_tol;
  j["tol-inner"] = cfg.settings.inner_tol;
  j["max-outer-iters"] = cfg.settings.max_outer_iters;
  j["max-inner-iters"] = cfg.settings.max_inner_iters;
  j["out"] = cfg.out;
  j["format"] = name_of(kFormats, cfg.format);
  return j.dump(2) + "\n";
}

RunConfig load_config(const std::string &text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error &e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object())
    throw ConfigError("config must be a JSON object");

  RunConfig cfg;
  for (const auto &[key, v] : j.items()) {
    if (key == "command")
      cfg.command = value_of(kCommands, string_of(v, key), "command");
    else if (key == "scheme") {
      cfg.schemes.clear();
      if (v.is_string())
        cfg.schemes.push_back(scheme_of(v.get<std::string>()));
      else if (v.is_array())
        for (const json &s : v)
          cfg.schemes.push_back(scheme_of(string_of(s, key)));
      else
        throw ConfigError("config key 'scheme' must be a string or array");
    } else if (key == "p")
      cfg.channel.P = number_of(v, key);
    else if (key == "p0")
      cfg.channel.P0 = number_of(v, key);
    else if (key == "n")
      cfg.channel.N = number_of(v, key);
    else if (key == "n0")
      cfg.channel.N0 = number_of(v, key);
    else if (key == "phi")
      cfg.power.phi = number_of(v, key);
    else if (key == "psi")
      cfg.power.psi = number_of(v, key);
    else if (key == "pc")
      cfg.power.Pc = number_of(v, key);
    else if (key == "pmax")
      cfg.pmax = number_of(v, key);
    else if (key == "p0max")
      cfg.p0max = number_of(v, key);
    else if (key == "p0-init")
      cfg.p0_init = number_of(v, key);
    else if (key == "kind")
      cfg.kind = value_of(kKinds, string_of(v, key), "sweep kind");
    else if (key == "from")
      cfg.from = number_of(v, key);
    else if (key == "to")
      cfg.to = number_of(v, key);
    else if (key == "step")
      cfg.step = number_of(v, key);
    else if (key == "tol-dinkelbach")
      cfg.settings.dinkelbach_tol = number_of(v, key);
    else if (key == "tol-am")
      cfg.settings.am_tol = number_of(v, key);
    else if (key == "tol-inner")
      cfg.settings.inner_tol = number_of(v, key);
    else if (key == "max-outer-iters")
      cfg.settings.max_outer_iters = int_of(v, key);
    else if (key == "max-inner-iters")
      cfg.settings.max_inner_iters = int_of(v, key);
    else if (key == "out")
      cfg.out = string_of(v, key);
    else if (key == "format")
      cfg.format = value_of(kFormats, string_of(v, key), "format");
    else
      throw ConfigError("unknown config key '" + key + "'");
  }
  return cfg;
}

std::optional<RunConfig> parse_command_line(int argc, const char *const *argv,
                                            std::ostream &out) {
  RunConfig cfg;
  const std::string config_path(find_config_path(argc, argv));
  if (!config_path.empty())
    cfg = load_config(read_file(config_path));

  CLI::App app{"Sum rates and energy-efficient power allocation for the "
               "3-user multi-way relay channel",
               "mwrc"};
  app.require_subcommand(1);
  app.fallthrough();

  std::vector<std::string> scheme_names;
  std::string kind_name, format_name, config_unused;
  double p0max = 0, p0_init = 0, from = 0, to = 0, step = 0;
  double pmax_db = 0, p0max_db = 0;

  app.add_option("--scheme", scheme_names,
                 "bound | af | df | nnc-snd | nnc-ian (repeatable or comma list)")
      ->delimiter(',');
  app.add_option("--p", cfg.channel.P, "Per-user transmit power [W]");
  app.add_option("--p0", cfg.channel.P0, "Relay transmit power [W]");
  app.add_option("--n", cfg.channel.N, "Noise power at each user [W]");
  app.add_option("--n0", cfg.channel.N0, "Noise power at the relay [W]");
  auto *pmax_opt = app.add_option("--pmax", cfg.pmax, "User power budget [W]");
  auto *p0max_opt = app.add_option("--p0max", p0max, "Relay power budget [W] (default: pmax)");
  auto *pmax_db_opt = app.add_option("--pmax-db", pmax_db, "User power budget [dB]");
  auto *p0max_db_opt = app.add_option("--p0max-db", p0max_db, "Relay power budget [dB]");
  pmax_db_opt->excludes(pmax_opt);
  p0max_db_opt->excludes(p0max_opt);
  auto *p0_init_opt = app.add_option("--p0-init", p0_init,
                                     "Alternating-maximization start for P0 [W]");
  app.add_option("--pc", cfg.power.Pc, "Total circuit power [W]");
  app.add_option("--phi", cfg.power.phi, "User amplifier inefficiency (>= 3)");
  app.add_option("--psi", cfg.power.psi, "Relay amplifier inefficiency (>= 1)");
  auto *kind_opt = app.add_option("--kind", kind_name, "spectral | ee | circuit");
  auto *from_opt = app.add_option("--from", from, "Sweep start");
  auto *to_opt = app.add_option("--to", to, "Sweep stop");
  auto *step_opt = app.add_option("--step", step, "Sweep step");
  app.add_option("--out", cfg.out, "Output path (default: stdout)");
  auto *format_opt = app.add_option("--format", format_name, "dat | csv | json");
  app.add_option("--config", config_unused, "JSON config file; flags override it");
  app.add_option("--tol-dinkelbach", cfg.settings.dinkelbach_tol, "Stop when |F(lambda)| falls below this");
  app.add_option("--tol-am", cfg.settings.am_tol, "Stop alternating when EE moves less than this");
  app.add_option("--tol-inner", cfg.settings.inner_tol, "Line-search tolerance, relative to the interval width");
  app.add_option("--max-outer-iters", cfg.settings.max_outer_iters, "Iteration cap for Dinkelbach and alternating loops");
  app.add_option("--max-inner-iters", cfg.settings.max_inner_iters, "Iteration cap for each line search");

  std::vector<std::pair<CLI::App *, Command>> subs;
  subs.emplace_back(app.add_subcommand("rate", "Evaluate sum rates"), Command::Rate);
  subs.emplace_back(app.add_subcommand("ee-solve", "Maximize energy efficiency"),
                    Command::EeSolve);
  subs.emplace_back(app.add_subcommand("sweep", "Tabulate a figure sweep"),
                    Command::Sweep);
  subs.emplace_back(app.add_subcommand("crossing", "Locate where two curves cross"),
                    Command::Crossing);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError &e) {
    throw ConfigError(e.what());
  }

  for (const auto &[sub, command] : subs)
    if (sub->parsed())
      cfg.command = command;
  if (!scheme_names.empty()) {
    cfg.schemes.clear();
    for (const std::string &s : scheme_names)
      cfg.schemes.push_back(scheme_of(s));
  }
  if (pmax_db_opt->count())
    cfg.pmax = db_to_linear(pmax_db);
  if (p0max_opt->count())
    cfg.p0max = p0max;
  if (p0max_db_opt->count())
    cfg.p0max = db_to_linear(p0max_db);
  if (p0_init_opt->count())
    cfg.p0_init = p0_init;
  if (kind_opt->count())
    cfg.kind = value_of(kKinds, kind_name, "sweep kind");
  if (from_opt->count())
    cfg.from = from;
  if (to_opt->count())
    cfg.to = to;
  if (step_opt->count())
    cfg.step = step;
  if (format_opt->count())
    cfg.format = value_of(kFormats, format_name, "format");
  return cfg;
}

void run(const RunConfig &cfg, std::ostream &out) {
  cfg.validate();

  std::ostringstream buf;
  switch (cfg.command) {
  case Command::Rate:
    run_rate(cfg, buf);
    break;
  case Command::EeSolve:
    run_ee_solve(cfg, buf);
    break;
  case Command::Sweep:
    run_sweep_command(cfg, buf);
    break;
  case Command::Crossing:
    run_crossing(cfg, buf);
    break;
  }

  if (cfg.out.empty()) {
    out << buf.str();
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file)
    throw ConfigError("cannot open output file '" + cfg.out + "'");
  file << buf.str();
}

int main_entry(int argc, const char *const *argv, std::ostream &out,
               std::ostream &err) {
  try {
    const auto cfg = parse_command_line(argc, argv, out);
    if (!cfg)
      return 0;
    run(*cfg, out);
    return 0;
  } catch (const ConfigError &e) {
    error_line(err, "usage", e.what());
    return 2;
  } catch (const DomainError &e) {
    error_line(err, "domain", e.what());
    return 2;
  } catch (const UnsupportedScheme &e) {
    error_line(err, "usage", e.what());
    return 2;
  } catch (const NonConvergence &e) {
    error_line(err, "nonconvergence", e.what());
    return 3;
  } catch (const std::exception &e) {
    error_line(err, "internal", e.what());
    return 1;
  }
}

} // namespace mwrc::cli
