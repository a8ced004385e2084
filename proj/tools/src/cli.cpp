#include "qkz/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qkz/checks.hpp"
#include "qkz/ellspace.hpp"
#include "qkz/errors.hpp"
#include "qkz/qkzcheck.hpp"

namespace qkz::cli {

using nlohmann::json;

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{"check-qseries", "check-rmatrix", "check-lemma",
                                               "check-theorem", "check-qkz",     "eval"};
  return names;
}

namespace {

void check_command(const std::string& c) {
  const auto& names = commands();
  if (std::find(names.begin(), names.end(), c) == names.end()) throw DomainError("unknown command: " + c);
}

Format parse_format(const std::string& f) {
  if (f == "json") return Format::Json;
  if (f == "csv") return Format::Csv;
  throw DomainError("format must be json or csv, got " + f);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read config file " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json cjson(cplx c) { return json::array({c.real(), c.imag()}); }

std::string bits_string(const std::vector<int>& bits) {
  std::string s;
  for (int b : bits) s += static_cast<char>('0' + b);
  return s;
}

std::string csv_number(double x) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::setprecision(17) << x;
  return os.str();
}

}  // namespace

void apply_config_json(const std::string& text, RunConfig& cfg) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw DomainError(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw DomainError("config: top level must be an object");
  try {
    if (j.contains("schema") && j.at("schema").get<int>() != 1) throw DomainError("config: unsupported schema");
    if (j.contains("command")) cfg.command = j.at("command").get<std::string>();
    if (j.contains("q")) cfg.q = j.at("q").get<double>();
    if (j.contains("k")) cfg.k = j.at("k").get<double>();
    if (j.contains("n")) cfg.n = j.at("n").get<int>();
    if (j.contains("l")) cfg.l = j.at("l").get<int>();
    if (j.contains("m")) cfg.m = j.at("m").get<int>();
    if (j.contains("nodes")) cfg.nodes = j.at("nodes").get<int>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("out")) cfg.out = j.at("out").get<std::string>();
    if (j.contains("format")) cfg.format = parse_format(j.at("format").get<std::string>());
    if (j.contains("z")) {
      const json& z = j.at("z");
      if (z.is_string()) {
        if (z.get<std::string>() != "auto") throw DomainError("config: z must be \"auto\" or a list");
        cfg.z.reset();
      } else {
        std::vector<cplx> pts;
        for (const auto& c : z) pts.emplace_back(c.at(0).get<double>(), c.at(1).get<double>());
        cfg.z = pts;
      }
    }
  } catch (const json::exception& e) {
    throw DomainError(std::string("config: ") + e.what());
  }
}

std::optional<RunConfig> parse(int argc, const char* const* argv, std::ostream& out) {
  CLI::App app{"qKZ solution checks"};
  std::string config_path, command, format;
  double q = 0, k = 0;
  int n = 0, l = 0, m = 0, nodes = 0;
  std::uint64_t seed = 0;
  std::string out_path;
  app.add_option("--config", config_path, "JSON config file; flags override it");
  app.add_option("--command", command, "check-qseries|check-rmatrix|check-lemma|check-theorem|check-qkz|eval");
  auto* oq = app.add_option("--q", q);
  auto* ok = app.add_option("--k", k);
  auto* om = app.add_option("--m", m);
  auto* on = app.add_option("--n", n);
  auto* ol = app.add_option("--l", l);
  auto* onodes = app.add_option("--nodes", nodes, "quadrature nodes per base circle");
  auto* oseed = app.add_option("--seed", seed);
  auto* oout = app.add_option("--out", out_path, "report path; stdout when omitted");
  auto* ofmt = app.add_option("--format", format, "json or csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw DomainError(e.what());
  }

  RunConfig cfg;
  if (!config_path.empty()) apply_config_json(read_file(config_path), cfg);
  if (!command.empty()) cfg.command = command;
  if (oq->count()) cfg.q = q;
  if (ok->count()) cfg.k = k;
  if (om->count()) cfg.m = m;
  if (on->count()) cfg.n = n;
  if (ol->count()) cfg.l = l;
  if (onodes->count()) cfg.nodes = nodes;
  if (oseed->count()) cfg.seed = seed;
  if (oout->count()) cfg.out = out_path;
  if (ofmt->count()) cfg.format = parse_format(format);
  if (cfg.command.empty()) throw DomainError("no command given");
  check_command(cfg.command);
  return cfg;
}

RunResult run(const RunConfig& cfg, std::ostream& diag) {
  try {
    check_command(cfg.command);
    if (cfg.nodes < 8) throw DomainError("nodes must be at least 8");
    const ParameterSet ps = ParameterSet::make(cfg.q, cfg.k, cfg.n, cfg.l, cfg.m);
    const std::vector<cplx> z = cfg.z ? *cfg.z : checks::auto_z(ps.n, cfg.seed);
    if (static_cast<int>(z.size()) != ps.n) throw DomainError("z must have n entries");

    json params{{"q", ps.q},   {"k", ps.k},         {"n", ps.n},         {"l", ps.l},
                {"m", ps.m},   {"p", ps.p},         {"s", ps.s},         {"kappa", ps.kappa},
                {"nodes", cfg.nodes}, {"seed", cfg.seed}, {"z", json::array()}};
    for (const auto& c : z) params["z"].push_back(cjson(c));

    checks::CheckSuite suite{cfg.command, {}};
    std::string csv;
    const std::string& c = cfg.command;
    if (c == "check-qseries") {
      suite = checks::qseries_identities(ps, cfg.seed);
    } else if (c == "check-rmatrix") {
      suite = checks::rmatrix_properties(ps, cfg.seed);
    } else if (c == "check-lemma") {
      suite = checks::alternating_sum(6, 100, cfg.seed, ps.q);
      suite.merge(checks::u_integral(ps, cfg.seed, 20, cfg.nodes));
    } else if (c == "check-theorem") {
      suite = checks::theorem(ps, cfg.seed);
      suite.merge(checks::assembly(ps, cfg.seed));
    } else if (c == "check-qkz") {
      suite = checks::qkz_residuals(ps, z, cfg.nodes, {checks::PsiForm::TV, checks::PsiForm::Tilde});
    } else {  // eval
      const PsiResult r = psi_tv(solve_default_w(ps), ps, z, cfg.nodes);
      csv = "bits,real,imag\n";
      for (const auto& bits : sector(ps.n, ps.l)) {
        const cplx v = r.psi.at(bits);
        csv += bits_string(bits) + "," + csv_number(v.real()) + "," + csv_number(v.imag()) + "\n";
        suite.add({{"bits", bits_string(bits)}, {"value", cjson(v)}}, 0.0, 1.0);
      }
    }

    RunResult res;
    res.exit_code = suite.pass() ? 0 : 1;
    if (cfg.format == Format::Csv) {
      if (c == "eval") {
        res.report = csv;
      } else {
        res.report = "case,residual,pass\n";
        for (std::size_t i = 0; i < suite.cases.size(); ++i)
          res.report += std::to_string(i) + "," + csv_number(suite.cases[i].residual) + "," +
                        (suite.cases[i].pass ? "true" : "false") + "\n";
      }
      return res;
    }
    json report{{"schema", 1}, {"command", cfg.command}, {"params", params}, {"cases", json::array()}};
    for (const auto& cs : suite.cases)
      report["cases"].push_back({{"inputs", cs.inputs}, {"residual", cs.residual}, {"pass", cs.pass}});
    report["max_residual"] = suite.max_residual();
    report["pass"] = suite.pass();
    res.report = report.dump(2) + "\n";
    return res;
  } catch (const DomainError& e) {
    diag << "error: " << e.what() << "\n";
    return {2, {}};
  } catch (const NumericAbort& e) {
    diag << "numeric abort: " << e.what() << "\n";
    return {3, {}};
  }
}

int main_entry(int argc, const char* const* argv) {
  std::optional<RunConfig> cfg;
  try {
    cfg = parse(argc, argv, std::cout);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (!cfg) return 0;
  const RunResult res = run(*cfg, std::cerr);
  if (res.exit_code >= 2) return res.exit_code;
  if (cfg->out.empty()) {
    std::cout << res.report;
  } else {
    std::ofstream f(cfg->out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << cfg->out << "\n";
      return 2;
    }
    f << res.report;
  }
  std::cerr << (res.exit_code == 0 ? "pass" : "FAIL") << "\n";
  return res.exit_code;
}

}  // namespace qkz::cli
