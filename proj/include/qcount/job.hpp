#pragma once

#include <optional>
#include <variant>

#include "qcount/json_io.hpp"
#include "qcount/moduli.hpp"
#include "qcount/oracle.hpp"

namespace qcount {

enum class Command { rss, ass, astable, kac, scan, verify_oracle, verify_identities };

const char* to_string(Command c);
Command command_from_string(const std::string& name);

struct OutputSpec {
  std::optional<std::string> json_path;
  bool latex = false;
};

/// One batch run: quiver, stability, slope (explicit or derived from a
/// dimension vector), truncation box, targets and the commands to apply.
struct JobConfig {
  Quiver quiver;
  Stability theta;
  std::variant<SlopeValue, DimVector> mu_spec;
  SeriesBox box;
  std::vector<DimVector> targets;
  std::vector<Command> commands;
  std::vector<int> oracle_fields;
  TwistConvention twist = TwistConvention::neg_g_f;
  OutputSpec output;
  OracleCaps caps;

  SlopeValue resolved_mu() const;
  void validate() const;

  static JobConfig from_json(const json& j);
  /// Accepts JSON or TOML, dispatching on extension with content fallback.
  static JobConfig from_file(const std::string& path);
  json echo_json() const;
};

struct RunOptions {
  int jobs = 1;
  std::optional<std::string> out_path;
  std::optional<TwistConvention> twist_override;
  std::optional<std::vector<Command>> commands_override;
};

struct RunOutcome {
  int exit_code = 0;
  ordered_json report;
};

/// Executes the configured commands; deterministic report (modulo the
/// run_info block), exit status 0 iff every requested verification passed.
RunOutcome run(const JobConfig& config, const RunOptions& options = {});

}  // namespace qcount
