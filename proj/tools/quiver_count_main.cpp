#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "qcount/job.hpp"

namespace {

int jobs_from_env() {
  const char* env = std::getenv("QUIVER_COUNT_JOBS");
  if (!env) return 1;
  int v = std::atoi(env);
  return v > 0 ? v : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symbolic counts of semistable quiver representations over finite fields"};
  app.require_subcommand(1);

  std::string config_path, out_path, twist_name;
  int jobs = 0;

  struct Sub {
    CLI::App* cmd;
    std::vector<qcount::Command> commands;
  };
  std::vector<Sub> subs;

  auto add_sub = [&](const char* name, const char* desc, std::vector<qcount::Command> commands) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    cmd->add_option("--config", config_path, "job configuration (JSON or TOML)")->required();
    cmd->add_option("--out", out_path, "report path (overrides the config)");
    cmd->add_option("--jobs", jobs, "worker threads for targets (env QUIVER_COUNT_JOBS)");
    cmd->add_option("--twist", twist_name,
                    "twist convention for astable: g-f, f-g, neg-g-f, neg-f-g");
    subs.push_back({cmd, std::move(commands)});
  };

  add_sub("rss", "semistable point-count polynomials R_mu^ss", {qcount::Command::rss});
  add_sub("ass", "absolutely indecomposable semistable class counts A_mu^ss", {qcount::Command::ass});
  add_sub("astable", "absolutely stable class counts A_mu^s", {qcount::Command::astable});
  add_sub("kac", "Kac polynomials (theta = 0 specialization)", {qcount::Command::kac});
  add_sub("scan", "positivity scan of A_mu^ss over the targets", {qcount::Command::scan});
  add_sub("verify-oracle", "compare computed polynomials with brute-force counts",
          {qcount::Command::verify_oracle});
  add_sub("verify-identities", "check the two P forms and the Exp identity",
          {qcount::Command::verify_identities});
  add_sub("run", "run the command list from the config file", {});

  CLI11_PARSE(app, argc, argv);

  try {
    qcount::JobConfig config = qcount::JobConfig::from_file(config_path);
    qcount::RunOptions options;
    options.jobs = jobs > 0 ? jobs : jobs_from_env();
    if (!out_path.empty()) options.out_path = out_path;
    if (!twist_name.empty())
      options.twist_override = qcount::twist_convention_from_string(twist_name);

    for (const auto& sub : subs) {
      if (sub.cmd->parsed() && !sub.commands.empty()) options.commands_override = sub.commands;
    }

    qcount::RunOutcome outcome = qcount::run(config, options);
    std::cout << outcome.report.dump(2) << std::endl;
    return outcome.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  }
}
