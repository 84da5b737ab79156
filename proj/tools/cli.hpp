#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace coeven::cli {

enum ExitCode : int {
  kClean = 0,
  kError = 1,
  kViolations = 2,
};

struct RunConfig {
  std::string command;  // solve | transform | lift | audit | witness | gen

  // Input: a file (or "-" for stdin), inline graph6 strings, or a generator.
  std::string input;
  std::vector<std::string> graphs;
  std::string model;  // all | gnp
  int n = -1;
  bool up_to = false;
  bool families = false;
  double p = 0.5;
  std::uint64_t seed = 1;
  std::size_t count = 1;

  std::string output;  // empty or "-" writes to the caller's stream

  std::string op;
  std::optional<int> vertex;
  std::string edge;  // "u,v"
  std::string direction = "forward";
  std::string set;  // "a,b,c" certificate for lift
  std::string relation;
  std::size_t limit = 0;
  bool violations_only = false;
  bool oracle = false;
  int cap = 64;
  int jobs = 1;
};

/// Parses `args` (without the program name) and runs the command.
/// Returns 0 when clean, 2 when an audit found violations, 1 on errors.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Runs an already-parsed configuration.
int execute(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace coeven::cli
