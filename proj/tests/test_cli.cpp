#include <doctest.h>

#include "mwrc/cli.hpp"
#include "mwrc/ee_solver.hpp"
#include "mwrc/errors.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace mwrc;
using doctest::Approx;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "mwrc");
  std::vector<const char *> argv;
  for (const std::string &a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string &text) {
  std::vector<std::string> v;
  std::istringstream is(text);
  for (std::string l; std::getline(is, l);)
    v.push_back(l);
  return v;
}

std::vector<std::string> fields(const std::string &line) {
  std::vector<std::string> v;
  std::istringstream is(line);
  for (std::string f; is >> f;)
    v.push_back(f);
  return v;
}

fs::path scratch(const std::string &name) {
  const fs::path dir = fs::temp_directory_path() / "mwrc_test_cli";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path &p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

TEST_CASE("rate prints the bare value for one scheme") {
  const Outcome r = invoke({"rate", "--scheme", "df", "--p", "1", "--p0", "1", "--n", "1", "--n0", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "1.5\n");
  CHECK(r.err.empty());
}

TEST_CASE("rate with several schemes prints a record") {
  const Outcome r = invoke({"rate", "--scheme", "af,nnc-snd", "--format", "csv"});
  REQUIRE(r.code == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 2);
  CHECK(l[0] == "af,nnc-snd");
  CHECK(l[1] == "0.678071905113,0.877443751082");
}

TEST_CASE("spectral sweep output") {
  const Outcome r = invoke({"sweep", "--kind", "spectral", "--from", "-20", "--to", "40", "--step", "0.1"});
  REQUIRE(r.code == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 602);
  CHECK(l[0] == "snr bound nnc_snd df af nnc_ifn");
  const auto zero = fields(l[201]);
  REQUIRE(zero.size() == 6);
  CHECK(zero[0] == "0");
  CHECK(zero[1] == "1.5");
  CHECK(zero[3] == "1.5");
  CHECK(zero[4] == "0.678071905113");

  const Outcome again = invoke({"sweep", "--kind", "spectral", "--from", "-20", "--to", "40", "--step", "0.1"});
  CHECK(again.out == r.out);
}

TEST_CASE("sweep defaults and JSON output") {
  const Outcome r = invoke({"sweep", "--kind", "circuit", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["x_label"] == "Pc");
  CHECK(j["columns"] == nlohmann::json::array({"DF", "AF"}));
  CHECK(j["rows"].size() == 99);
  CHECK(j["rows"][0][0].get<double>() == 1.0);
}

TEST_CASE("ee-solve matches the grid oracle") {
  const Outcome r = invoke({"ee-solve", "--scheme", "af", "--pmax", "10", "--p0max", "10", "--pc", "1", "--phi", "3", "--psi", "1"});
  REQUIRE(r.code == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 2);
  CHECK(l[0] == "scheme P_opt P0_opt EE iterations converged");
  const auto f = fields(l[1]);
  REQUIRE(f.size() == 6);
  CHECK(f[0] == "af");
  CHECK(f[5] == "1");
  const OptResult g = grid_oracle(Scheme::AF, 1, 1, {3, 1, 1}, {10, 10}, 2001);
  CHECK(std::stod(f[3]) == Approx(g.ee_value).epsilon(1e-4));
}

TEST_CASE("crossing subcommand") {
  const Outcome r = invoke({"crossing", "--kind", "spectral", "--scheme", "df,nnc-snd", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["found"] == true);
  CHECK(j["refined"] == true);
  CHECK(j["x_cross"].get<double>() == Approx(14.385931713833623).epsilon(1e-7));

  const Outcome none = invoke({"crossing", "--kind", "spectral", "--scheme", "af,nnc-snd"});
  REQUIRE(none.code == 0);
  CHECK(fields(lines(none.out)[1])[0] == "0");
  CHECK(fields(lines(none.out)[1])[1] == "nan");
}

TEST_CASE("usage errors exit 2 without partial output") {
  for (const std::vector<std::string> &args :
       {std::vector<std::string>{"rate", "--bogus"},
        {"rate", "--scheme", "cf"},
        {"rate", "--p", "-1"},
        {"rate", "--p", "abc"},
        {"ee-solve", "--phi", "2"},
        {"ee-solve", "--p0-init", "20"},
        {"sweep", "--kind", "spectral", "--from", "5", "--to", "1"},
        {"sweep", "--kind", "fig9"},
        {"sweep", "--format", "xml"},
        {"rate", "--config", "/nonexistent/mwrc.json"},
        {}}) {
    CAPTURE(args.size());
    const Outcome r = invoke(args);
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    const auto j = nlohmann::json::parse(r.err);
    CHECK(j.contains("error"));
    CHECK(j.contains("message"));
  }
}

TEST_CASE("non-convergence exits 3") {
  const Outcome r = invoke({"ee-solve", "--scheme", "af", "--max-outer-iters", "1"});
  CHECK(r.code == 3);
  CHECK(r.out.empty());
  CHECK(nlohmann::json::parse(r.err)["error"] == "nonconvergence");
}

TEST_CASE("help exits 0") {
  const Outcome r = invoke({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("ee-solve") != std::string::npos);
}

TEST_CASE("config round trip") {
  cli::RunConfig cfg;
  cfg.command = cli::Command::Sweep;
  cfg.schemes = {Scheme::DF, Scheme::NncIan};
  cfg.channel = {2.0, 3.0, 0.5, 0.25};
  cfg.power = {4.0, 1.5, 0.2};
  cfg.pmax = 7.0;
  cfg.p0max = 9.0;
  cfg.p0_init = 1.0;
  cfg.kind = SweepKind::EeVsPmax;
  cfg.from = -10.0;
  cfg.to = 5.0;
  cfg.step = 0.25;
  cfg.settings.am_tol = 1e-9;
  cfg.settings.max_inner_iters = 300;
  cfg.out = "table.csv";
  cfg.format = TableFormat::Csv;
  CHECK(cli::load_config(cli::save_config(cfg)) == cfg);
  CHECK(cli::load_config(cli::save_config(cli::RunConfig{})) == cli::RunConfig{});

  CHECK_THROWS_AS(cli::load_config("{\"colour\": 1}"), ConfigError);
  CHECK_THROWS_AS(cli::load_config("{\"pmax\": \"ten\"}"), ConfigError);
  CHECK_THROWS_AS(cli::load_config("not json"), ConfigError);
}

TEST_CASE("flags override the config file") {
  cli::RunConfig cfg;
  cfg.command = cli::Command::Rate;
  cfg.schemes = {Scheme::DF};
  cfg.channel = {1.0, 1.0, 1.0, 1.0};
  const fs::path path = scratch("rate.json");
  std::ofstream(path) << cli::save_config(cfg);

  const Outcome base = invoke({"rate", "--config", path.string()});
  REQUIRE(base.code == 0);
  CHECK(base.out == "1.5\n");

  const Outcome over = invoke({"rate", "--config", path.string(), "--scheme", "af"});
  REQUIRE(over.code == 0);
  CHECK(over.out == "0.678071905113\n");

  std::ostringstream sink;
  const std::string p = path.string();
  const char *argv[] = {"mwrc", "rate", "--config", p.c_str(), "--p0", "4"};
  const auto parsed = cli::parse_command_line(6, argv, sink);
  REQUIRE(parsed.has_value());
  CHECK(parsed->channel.P0 == 4.0);
  CHECK(parsed->channel.P == 1.0);
  CHECK(parsed->schemes == std::vector<Scheme>{Scheme::DF});
}

TEST_CASE("--out writes the artifact to a file") {
  const fs::path path = scratch("sweep.dat");
  fs::remove(path);
  const Outcome r = invoke({"sweep", "--kind", "spectral", "--from", "0", "--to", "1", "--step", "0.5", "--out", path.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  const auto l = lines(slurp(path));
  REQUIRE(l.size() == 4);
  CHECK(l[0] == "snr bound nnc_snd df af nnc_ifn");
}

#ifdef MWRC_CLI_PATH
TEST_CASE("installed binary") {
  const std::string cmd = std::string(MWRC_CLI_PATH) +
                          " rate --scheme df --p 1 --p0 1 --n 1 --n0 1 2>&1";
  FILE *pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[256] = {};
  std::string text;
  while (std::fgets(buf, sizeof buf, pipe))
    text += buf;
  const int status = pclose(pipe);
  CHECK(WEXITSTATUS(status) == 0);
  CHECK(text == "1.5\n");

  const std::string bad = std::string(MWRC_CLI_PATH) + " rate --bogus >/dev/null 2>&1";
  CHECK(WEXITSTATUS(std::system(bad.c_str())) == 2);
  const std::string stuck =
      std::string(MWRC_CLI_PATH) + " ee-solve --scheme af --max-outer-iters 1 >/dev/null 2>&1";
  CHECK(WEXITSTATUS(std::system(stuck.c_str())) == 3);
}
#endif
