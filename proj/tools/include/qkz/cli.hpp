#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qkz/params.hpp"

namespace qkz::cli {

enum class Format { Json, Csv };

struct RunConfig {
  std::string command;
  double q = 0.6;
  double k = 1.0;
  int n = 2;
  int l = 1;
  int m = 0;
  int nodes = 256;
  std::uint64_t seed = 7;
  std::optional<std::vector<cplx>> z;  // empty means auto
  std::string out;                     // empty means stdout
  Format format = Format::Json;
};

const std::vector<std::string>& commands();

// Reads --config first, then applies every flag given on the command line.
// Throws DomainError on bad input. Returns nullopt when help was printed.
std::optional<RunConfig> parse(int argc, const char* const* argv, std::ostream& out);

// Fields of a config file: schema, command, q, k, n, l, m, nodes, seed, z, out, format.
// z is "auto" or a list of [re, im] pairs.
void apply_config_json(const std::string& text, RunConfig& cfg);

struct RunResult {
  int exit_code = 0;
  std::string report;  // JSON, or CSV when format is csv
};

// 0 all cases pass, 1 some case fails, 2 domain/config error, 3 numeric abort.
RunResult run(const RunConfig& cfg, std::ostream& diag);

// parse + run + write, for main().
int main_entry(int argc, const char* const* argv);

}  // namespace qkz::cli
