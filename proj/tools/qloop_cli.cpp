// qloop: command-line driver over the C API.
#include <qloop/qloop.h>

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitError = 3;

struct Options {
  std::optional<std::string> config_file;
  std::optional<std::string> out;
  // (key, value) pairs given as flags, applied after the config file.
  std::vector<std::pair<std::string, std::optional<std::string>>> keys{
      {"algebra", {}}, {"rep", {}},    {"lambda", {}}, {"module", {}}, {"M", {}},
      {"N", {}},       {"degree", {}}, {"s", {}},      {"format", {}}, {"zeta2_shift", {}}};
};

void add_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--config", o.config_file, "config file with 'key = value' lines");
  cmd->add_option("--out", o.out, "write the report to this file instead of stdout");
  for (auto& [key, value] : o.keys) {
    std::string flag = "--" + key;
    for (auto& ch : flag)
      if (ch == '_') ch = '-';
    cmd->add_option(flag, value, "sets '" + key + "'");
  }
}

int usage(const std::string& msg) {
  std::cerr << "qloop: " << msg << "\n";
  return kExitUsage;
}

int error_exit(qloop_status s) {
  std::cerr << "qloop: " << qloop_last_error() << "\n";
  return s == QLOOP_USAGE_ERROR ? kExitUsage : kExitError;
}

int run(const std::string& command, const Options& o) {
  qloop_config* cfg = qloop_config_new();
  if (!cfg) return kExitError;
  struct Guard {
    qloop_config* c;
    ~Guard() { qloop_config_free(c); }
  } guard{cfg};

  // Precedence: environment defaults, then the config file, then flags.
  for (const auto& [env, key] : {std::pair{"QLOOP_DEFAULT_M", "M"}, std::pair{"QLOOP_DEFAULT_N", "N"}})
    if (const char* v = std::getenv(env))
      if (qloop_status s = qloop_config_set(cfg, key, v); s != QLOOP_OK) return error_exit(s);
  if (o.config_file)
    if (qloop_status s = qloop_config_load_file(cfg, o.config_file->c_str()); s != QLOOP_OK) return error_exit(s);
  for (const auto& [key, value] : o.keys)
    if (value)
      if (qloop_status s = qloop_config_set(cfg, key.c_str(), value->c_str()); s != QLOOP_OK) return error_exit(s);

  qloop_report* report = nullptr;
  if (qloop_status s = qloop_run(cfg, command.c_str(), &report); s != QLOOP_OK) return error_exit(s);
  char* text = nullptr;
  const qloop_status rs = qloop_report_render(report, nullptr, &text);
  const bool passed = qloop_report_passed(report) != 0;
  qloop_report_free(report);
  if (rs != QLOOP_OK) return error_exit(rs);
  std::string body(text);
  qloop_string_free(text);

  if (o.out) {
    std::ofstream f(*o.out, std::ios::binary);
    if (!(f << body)) return usage("cannot write '" + *o.out + "'");
  } else {
    std::fwrite(body.data(), 1, body.size(), stdout);
  }
  return passed ? 0 : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact l-weight computations for quantum loop algebras of sl2 and sl3"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(qloop_version()));
  const std::vector<std::pair<std::string, std::string>> commands{
      {"verify", "run the relation, two-path, catalog and twist checks"},
      {"lweights", "tabulate reconstructed l-weights of the basis vectors"},
      {"factorize", "check the triple oscillator tensor product against the shifted evaluation weight"},
      {"ledger", "print the typo ledger"}};
  std::vector<Options> opts(commands.size());
  for (std::size_t i = 0; i < commands.size(); ++i) add_options(app.add_subcommand(commands[i].first, commands[i].second), opts[i]);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  for (std::size_t i = 0; i < commands.size(); ++i)
    if (app.got_subcommand(commands[i].first)) return run(commands[i].first, opts[i]);
  return usage("no command");
}
