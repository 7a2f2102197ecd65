#include <iostream>

#include "CLI11.hpp"
#include "fsing/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"fsing: F-singularity computations over prime fields"};
  app.set_version_flag("--version", "fsing 1.0");

  std::string command;
  std::string path;
  fsing::CliOptions o;
  std::string commands;
  for (const std::string& c : fsing::cli_commands()) commands += (commands.empty() ? "" : ", ") + c;

  app.add_option("command", command, "one of: " + commands)->required();
  app.add_option("session", path, "session file")->required();
  app.add_option("--ideal", o.ideal, "named ideal");
  app.add_option("--other", o.other, "second named ideal");
  app.add_option("--poly", o.poly, "named polynomial or variable");
  app.add_option("--map", o.map, "named map");
  app.add_option("--at", o.at, "named maximal ideal (default: the variables)");
  app.add_option("--c", o.c, "named test element or starting polynomial");
  app.add_option("--order", o.order, "degrevlex or lex");
  app.add_option("--e", o.e, "Frobenius level");
  app.add_option("--emax", o.emax, "largest level");
  app.add_option("--t", o.t, "exponent as a/b");
  app.add_option("--tmax", o.tmax, "largest exponent as a/b");
  app.add_option("--denom", o.denom, "grid denominator");
  app.add_option("--m", o.m, "power for bs-check");
  app.add_option("--tolerance", o.tolerance, "convergence tolerance as a/b");
  app.add_flag("--rounding-q", o.round_up_q, "use a^ceil(t q) instead of a^ceil(t (q-1))");
  app.add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1u, 256u));
  app.add_flag("--json", o.json, "JSON envelope");
  app.add_flag("--timing", o.timing, "include wall time");

  CLI11_PARSE(app, argc, argv);

  fsing::RunOutcome r = fsing::run_command_file(command, path, o);
  for (const std::string& w : r.warnings) std::cerr << w << "\n";
  std::cout << r.output;
  return r.exit_code;
}
