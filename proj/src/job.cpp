#include "qcount/job.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ctime>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "qcount/toml_lite.hpp"

namespace qcount {

const char* to_string(Command c) {
  switch (c) {
    case Command::rss: return "rss";
    case Command::ass: return "ass";
    case Command::astable: return "astable";
    case Command::kac: return "kac";
    case Command::scan: return "scan";
    case Command::verify_oracle: return "verify-oracle";
    case Command::verify_identities: return "verify-identities";
  }
  return "?";
}

Command command_from_string(const std::string& name) {
  if (name == "rss") return Command::rss;
  if (name == "ass") return Command::ass;
  if (name == "astable") return Command::astable;
  if (name == "kac") return Command::kac;
  if (name == "scan") return Command::scan;
  if (name == "verify-oracle") return Command::verify_oracle;
  if (name == "verify-identities") return Command::verify_identities;
  throw std::invalid_argument("unknown command: " + name);
}

SlopeValue JobConfig::resolved_mu() const {
  if (std::holds_alternative<SlopeValue>(mu_spec)) return std::get<SlopeValue>(mu_spec);
  return slope(theta, std::get<DimVector>(mu_spec));
}

void JobConfig::validate() const {
  if (theta.size() != quiver.n) throw std::invalid_argument("config.theta: length must equal quiver.n");
  if (box.vars() != quiver.n) throw std::invalid_argument("config.box: length must equal quiver.n");
  for (const auto& t : targets) {
    if (t.size() != quiver.n) throw std::invalid_argument("config.targets: entries must have length quiver.n");
    if (!box.contains(t)) throw std::invalid_argument("config.targets: every target must lie inside the box");
  }
  for (int f : oracle_fields)
    if (!SmallField::supported(f))
      throw std::invalid_argument("config.oracle_fields: unsupported field order " + std::to_string(f));
  if (std::holds_alternative<DimVector>(mu_spec)) {
    const auto& a = std::get<DimVector>(mu_spec);
    if (a.size() != quiver.n || a.is_zero())
      throw std::invalid_argument("config.mu.from_alpha: need a nonzero vector of length quiver.n");
  }
}

JobConfig JobConfig::from_json(const json& j) {
  JobConfig c;
  try {
    c.quiver = quiver_from_json(j.at("quiver"));
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("config.quiver: ") + e.what());
  }
  try {
    if (j.contains("theta") && j.at("theta").is_array())
      c.theta = Stability(j.at("theta").get<std::vector<int>>());
    else
      c.theta = stability_from_json(j.at("theta"));
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("config.theta: ") + e.what());
  }

  try {
    if (j.contains("mu")) {
      const auto& m = j.at("mu");
      if (m.is_number_integer())
        c.mu_spec = SlopeValue(m.get<long>());
      else if (m.is_string())
        c.mu_spec = rational_from_string(m.get<std::string>());
      else if (m.is_object() && m.contains("from_alpha"))
        c.mu_spec = dimvector_from_json(m.at("from_alpha"));
      else
        throw std::invalid_argument("expected an integer, a rational string, or {\"from_alpha\": [...]}");
    } else if (j.contains("mu_from_alpha")) {
      c.mu_spec = dimvector_from_json(j.at("mu_from_alpha"));
    } else {
      throw std::invalid_argument("missing");
    }
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("config.mu: ") + e.what());
  }

  try {
    c.box = SeriesBox(dimvector_from_json(j.at("box")));
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("config.box: ") + e.what());
  }
  try {
    for (const auto& t : j.value("targets", json::array())) c.targets.push_back(dimvector_from_json(t));
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("config.targets: ") + e.what());
  }
  try {
    for (const auto& name : j.value("commands", json::array()))
      c.commands.push_back(command_from_string(name.get<std::string>()));
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("config.commands: ") + e.what());
  }
  try {
    for (const auto& f : j.value("oracle_fields", json::array())) c.oracle_fields.push_back(f.get<int>());
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("config.oracle_fields: ") + e.what());
  }
  if (j.contains("twist_convention"))
    c.twist = twist_convention_from_string(j.at("twist_convention").get<std::string>());
  if (j.contains("output")) {
    const auto& o = j.at("output");
    if (o.contains("json_path")) c.output.json_path = o.at("json_path").get<std::string>();
    c.output.latex = o.value("latex", false);
  }
  if (j.contains("caps")) {
    const auto& o = j.at("caps");
    c.caps.entries_f2 = o.value("entries_f2", c.caps.entries_f2);
    c.caps.entries_f3 = o.value("entries_f3", c.caps.entries_f3);
    c.caps.entries_f4plus = o.value("entries_f4plus", c.caps.entries_f4plus);
    c.caps.gl_cap = o.value("gl_cap", c.caps.gl_cap);
    c.caps.end_dim_f2 = o.value("end_dim_f2", c.caps.end_dim_f2);
    c.caps.end_dim_f3 = o.value("end_dim_f3", c.caps.end_dim_f3);
    c.caps.end_dim_f4plus = o.value("end_dim_f4plus", c.caps.end_dim_f4plus);
  }
  c.validate();
  return c;
}

JobConfig JobConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();

  bool looks_toml = path.size() > 5 && path.substr(path.size() - 5) == ".toml";
  if (!looks_toml) {
    try {
      return from_json(json::parse(text));
    } catch (const json::parse_error&) {
      // fall through to the TOML reader
    }
  }
  return from_json(toml_lite::parse(text));
}

json JobConfig::echo_json() const {
  json j;
  j["quiver"] = quiver_to_json(quiver);
  j["theta"] = theta.weights;
  if (std::holds_alternative<SlopeValue>(mu_spec))
    j["mu"] = rational_to_string(std::get<SlopeValue>(mu_spec));
  else
    j["mu"] = json{{"from_alpha", dimvector_to_json(std::get<DimVector>(mu_spec))}};
  j["box"] = dimvector_to_json(box.bound);
  json ts = json::array();
  for (const auto& t : targets) ts.push_back(dimvector_to_json(t));
  j["targets"] = ts;
  json cs = json::array();
  for (Command c : commands) cs.push_back(to_string(c));
  j["commands"] = cs;
  j["oracle_fields"] = oracle_fields;
  j["twist_convention"] = to_string(twist);
  return j;
}

namespace {

ordered_json poly_entry(const QPolynomial& p, bool latex) {
  ordered_json e;
  e["poly"] = poly_to_json(p);
  e["text"] = p.to_string();
  if (latex) e["latex"] = p.to_latex();
  return e;
}

bool is_abs_indec_ss(const FFRep& m, const Stability& theta, const SlopeValue& mu,
                     const OracleCaps& caps) {
  if (m.dim.is_zero()) return false;
  if (!member_rep_ss_mu(m, theta, mu)) return false;
  return classify(m, caps) == RepClass::absolutely_indecomposable;
}

bool is_abs_stable(const FFRep& m, const Stability& theta, const SlopeValue& mu,
                   const OracleCaps& caps) {
  if (m.dim.is_zero()) return false;
  if (!in_delta_plus(theta, mu, m.dim)) return false;
  if (!subrep_test(m, theta).stable) return false;
  return classify(m, caps) == RepClass::absolutely_indecomposable;
}

struct TargetOutcome {
  ordered_json entry;
  std::vector<std::string> failures;
};

TargetOutcome evaluate_target(const JobConfig& config, const CountEngine& engine,
                              const std::vector<Command>& commands, TwistConvention twist,
                              const DimVector& alpha) {
  TargetOutcome out;
  out.entry["alpha"] = dimvector_to_json(alpha);
  bool latex = config.output.latex;
  const SlopeValue mu = config.resolved_mu();

  auto alpha_text = [&] {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < alpha.size(); ++i) os << (i ? "," : "") << alpha[i];
    os << ")";
    return os.str();
  }();

  auto has = [&](Command c) {
    return std::find(commands.begin(), commands.end(), c) != commands.end();
  };

  std::optional<QPolynomial> rss_poly, ass_poly, astable_poly;

  if (has(Command::rss) || has(Command::verify_oracle)) {
    try {
      rss_poly = to_polynomial(engine.rss(alpha));
      if (has(Command::rss)) out.entry["rss"] = poly_entry(*rss_poly, latex);
    } catch (const std::exception& e) {
      out.failures.push_back("target " + alpha_text + " rss: " + e.what());
      out.entry["rss"] = ordered_json{{"error", e.what()}};
    }
  }
  if (has(Command::ass) || has(Command::verify_oracle)) {
    try {
      ass_poly = engine.a_ss(alpha);
      if (has(Command::ass)) out.entry["ass"] = poly_entry(*ass_poly, latex);
    } catch (const std::exception& e) {
      out.failures.push_back("target " + alpha_text + " ass: " + e.what());
      out.entry["ass"] = ordered_json{{"error", e.what()}};
    }
  }
  if (has(Command::astable) || has(Command::verify_oracle)) {
    try {
      astable_poly = engine.a_stable(alpha, twist);
      if (has(Command::astable)) {
        out.entry["astable"] = poly_entry(*astable_poly, latex);
        out.entry["astable"]["twist"] = to_string(twist);
      }
    } catch (const std::exception& e) {
      out.failures.push_back("target " + alpha_text + " astable: " + e.what());
      out.entry["astable"] = ordered_json{{"error", e.what()}};
    }
  }
  if (has(Command::kac)) {
    try {
      out.entry["kac"] = poly_entry(kac_polynomial(config.quiver, alpha, config.box), latex);
    } catch (const std::exception& e) {
      out.failures.push_back("target " + alpha_text + " kac: " + e.what());
      out.entry["kac"] = ordered_json{{"error", e.what()}};
    }
  }

  if (has(Command::verify_oracle)) {
    ordered_json oracle;
    oracle["fields"] = config.oracle_fields;
    auto compare = [&](const char* key, const std::optional<QPolynomial>& poly,
                       const std::function<long long(const SmallField&)>& count) {
      ordered_json rows = ordered_json::array();
      for (int f_order : config.oracle_fields) {
        ordered_json row;
        row["q"] = f_order;
        try {
          if (!poly) throw std::logic_error("symbolic value unavailable");
          const SmallField& f = SmallField::of_order(f_order);
          BigRational expected = poly->eval(BigRational(f_order));
          long long counted = count(f);
          row["computed"] = rational_to_string(expected);
          row["oracle"] = counted;
          bool match = expected == BigRational(static_cast<long>(counted));
          row["match"] = match;
          if (!match)
            out.failures.push_back("target " + alpha_text + " " + key + " vs oracle at q=" +
                                   std::to_string(f_order) + ": computed " +
                                   rational_to_string(expected) + ", counted " +
                                   std::to_string(counted));
        } catch (const std::exception& e) {
          row["error"] = e.what();
          out.failures.push_back("target " + alpha_text + " " + key + " oracle at q=" +
                                 std::to_string(f_order) + ": " + e.what());
        }
        rows.push_back(row);
      }
      oracle[key] = rows;
    };

    compare("rss", rss_poly, [&](const SmallField& f) {
      return count_reps_if(config.quiver, alpha, f, config.caps, [&](const FFRep& m) {
        return member_rep_ss_mu(m, config.theta, mu);
      });
    });
    compare("ass", ass_poly, [&](const SmallField& f) {
      return count_iso_classes(config.quiver, alpha, f, config.caps, [&](const FFRep& m) {
        return is_abs_indec_ss(m, config.theta, mu, config.caps);
      });
    });
    compare("astable", astable_poly, [&](const SmallField& f) {
      return count_iso_classes(config.quiver, alpha, f, config.caps, [&](const FFRep& m) {
        return is_abs_stable(m, config.theta, mu, config.caps);
      });
    });
    out.entry["oracle"] = oracle;
  }

  return out;
}

}  // namespace

RunOutcome run(const JobConfig& config, const RunOptions& options) {
  auto start = std::chrono::steady_clock::now();
  config.validate();

  std::vector<Command> commands = options.commands_override.value_or(config.commands);
  if (commands.empty()) throw std::invalid_argument("config.commands: no commands requested");
  TwistConvention twist = options.twist_override.value_or(config.twist);

  CountJob job(config.quiver, config.theta, config.resolved_mu(), config.box);
  CountEngine engine(job);

  std::vector<std::string> failures;
  std::vector<TargetOutcome> outcomes(config.targets.size());

  bool per_target = false;
  for (Command c : commands)
    per_target |= c == Command::rss || c == Command::ass || c == Command::astable ||
                  c == Command::kac || c == Command::verify_oracle;

  if (per_target) {
    int jobs = std::max(1, options.jobs);
    if (jobs == 1 || config.targets.size() <= 1) {
      for (size_t i = 0; i < config.targets.size(); ++i)
        outcomes[i] = evaluate_target(config, engine, commands, twist, config.targets[i]);
    } else {
      std::atomic<size_t> next{0};
      auto worker = [&] {
        while (true) {
          size_t i = next.fetch_add(1);
          if (i >= config.targets.size()) break;
          outcomes[i] = evaluate_target(config, engine, commands, twist, config.targets[i]);
        }
      };
      std::vector<std::thread> pool;
      for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }
  }

  ordered_json report;
  report["schema"] = 1;
  report["tool"] = "quiver-count";
  report["run_info"] = ordered_json::object();  // filled at the end
  report["config"] = config.echo_json();
  {
    json cs = json::array();
    for (Command c : commands) cs.push_back(to_string(c));
    report["commands"] = cs;
    report["twist_convention"] = to_string(twist);
  }

  if (per_target) {
    ordered_json targets = ordered_json::array();
    for (auto& o : outcomes) {
      targets.push_back(o.entry);
      failures.insert(failures.end(), o.failures.begin(), o.failures.end());
    }
    report["targets"] = targets;
  }

  if (std::find(commands.begin(), commands.end(), Command::verify_identities) != commands.end()) {
    ordered_json checks;
    const TruncatedSeries& p1 = engine.p_partition_form();
    const TruncatedSeries& p2 = engine.p_tuple_form();
    bool forms_equal = p1 == p2;
    checks["form_equality"] = ordered_json{{"equal", forms_equal}};
    if (!forms_equal) {
      failures.push_back("P partition form and tuple form disagree");
      checks["form_equality"]["partition_form"] = series_to_json(p1);
      checks["form_equality"]["tuple_form"] = series_to_json(p2);
    }
    ExpIdentityReport exp_report = verify_exp_identity(job);
    checks["exp_identity"] = ordered_json{{"equal", exp_report.equal}};
    if (!exp_report.equal) {
      failures.push_back("Exp identity fails");
      checks["exp_identity"]["first_mismatch"] = dimvector_to_json(*exp_report.first_mismatch);
      checks["exp_identity"]["lhs"] = ratfunc_to_json(exp_report.lhs);
      checks["exp_identity"]["rhs"] = ratfunc_to_json(exp_report.rhs);
    }
    report["identity_checks"] = checks;
  }

  if (std::find(commands.begin(), commands.end(), Command::scan) != commands.end()) {
    ordered_json scan;
    try {
      PositivityReport pr = positivity_scan({job}, {config.targets});
      ordered_json rows = ordered_json::array();
      for (const auto& row : pr.rows) {
        ordered_json r;
        r["alpha"] = dimvector_to_json(row.alpha);
        r["in_delta_plus"] = row.in_delta;
        r["integer_coefficients"] = row.integer_coefficients;
        r["nonnegative"] = row.nonnegative;
        r["poly"] = poly_to_json(row.poly);
        r["text"] = row.poly.to_string();
        rows.push_back(r);
      }
      scan["rows"] = rows;
      scan["all_integer"] = pr.all_integer;
      scan["all_nonnegative"] = pr.all_nonnegative;
    } catch (const std::exception& e) {
      scan["error"] = e.what();
      failures.push_back(std::string("positivity scan: ") + e.what());
    }
    report["positivity_scan"] = scan;
  }

  report["failures"] = failures;
  report["status"] = failures.empty() ? "pass" : "fail";

  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  {
    auto now = std::chrono::system_clock::now();
    auto time = std::chrono::system_clock::to_time_t(now);
    char buf[64];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&time));
    ordered_json info;
    info["generated_at"] = buf;
    info["elapsed_ms"] = elapsed;
    info["jobs"] = std::max(1, options.jobs);
    report["run_info"] = info;
  }

  std::optional<std::string> out_path = options.out_path ? options.out_path : config.output.json_path;
  if (out_path) {
    std::ofstream out(*out_path);
    if (!out) throw std::runtime_error("cannot write report to " + *out_path);
    out << report.dump(2) << "\n";
  }

  RunOutcome outcome;
  outcome.exit_code = failures.empty() ? 0 : 1;
  outcome.report = std::move(report);
  return outcome;
}

}  // namespace qcount
