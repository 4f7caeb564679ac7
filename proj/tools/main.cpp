#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rcum/csv.hpp"
#include "rcum/errors.hpp"
#include "rcum/numeric.hpp"
#include "rcum/realized.hpp"
#include "rcum/recursion.hpp"
#include "rcum/serialize.hpp"
#include "rcum/suites.hpp"

namespace {

using nlohmann::ordered_json;

struct RunConfig {
  std::uint64_t seed = 19700101;
  double z_gate = 4.0;
  int n_max = rcum::kDefaultMaxOrder;
  int threads = 1;
  std::string out;
};

std::vector<double> parse_values(const std::string& text) {
  std::vector<double> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string field = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      values.push_back(std::stod(field));
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse value '" + field + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return values;
}

void emit(const RunConfig& config, const ordered_json& payload) {
  const std::string text = payload.dump(2);
  if (config.out.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(config.out, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + config.out);
    out << text << "\n";
  }
}

rcum::McOptions mc_options(const RunConfig& config) {
  rcum::McOptions opts;
  opts.z_gate = config.z_gate;
  opts.threads = config.threads;
  return opts;
}

int run(int argc, char** argv) {
  RunConfig config;

  CLI::App app{"Realized cumulants for martingales: Bell polynomial core, "
               "closed-form martingale simulators, realized statistics and "
               "verification suites"};
  app.require_subcommand(1);
  app.add_option("--seed", config.seed, "RNG seed (REALIZED_CUMULANTS_SEED overrides)");
  app.add_option("--z-gate", config.z_gate, "Monte Carlo acceptance gate in standard errors")
      ->check(CLI::PositiveNumber);
  app.add_option("--n-max", config.n_max, "maximum polynomial order")
      ->check(CLI::Range(1, 20));
  app.add_option("--threads", config.threads, "Monte Carlo worker count")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", config.out, "write the JSON (or CSV) output to this file");

  // bell eval | bell terms
  auto* bell = app.add_subcommand("bell", "complete Bell polynomials");
  bell->fallthrough();
  bell->require_subcommand(1);
  std::string bell_inputs;
  auto* bell_eval = bell->add_subcommand("eval", "evaluate B_n(x_1..x_n)");
  bell_eval->fallthrough();
  bell_eval->add_option("--x", bell_inputs, "comma-separated x_1..x_n")->required();
  int bell_order = 0;
  auto* bell_terms_cmd = bell->add_subcommand("terms", "exact expansion of B_n");
  bell_terms_cmd->fallthrough();
  bell_terms_cmd->add_option("--order", bell_order, "polynomial order")->required();

  // convert m2c | c2m
  auto* convert = app.add_subcommand("convert", "moment / cumulant conversion");
  convert->fallthrough();
  convert->require_subcommand(1);
  std::string convert_inputs;
  auto* m2c = convert->add_subcommand("m2c", "moments to cumulants");
  m2c->fallthrough();
  m2c->add_option("--values", convert_inputs, "comma-separated m_1..m_n")->required();
  auto* c2m = convert->add_subcommand("c2m", "cumulants to moments");
  c2m->fallthrough();
  c2m->add_option("--values", convert_inputs, "comma-separated k_1..k_n")->required();

  // simulate
  auto* simulate = app.add_subcommand("simulate", "sample martingale paths to CSV");
  simulate->fallthrough();
  std::string model_name = "poisson";
  double lambda = 1.0;
  double horizon = 1.0;
  int order = 2;
  std::size_t n_paths = 1;
  int grid = 16;
  simulate->add_option("--model", model_name, "poisson | expmart | brownian");
  simulate->add_option("--lambda", lambda, "poisson intensity");
  simulate->add_option("--horizon", horizon, "time horizon T");
  simulate->add_option("--order", order, "number of components X^{(1..k)}");
  simulate->add_option("--paths", n_paths, "number of paths");
  simulate->add_option("--grid", grid, "grid cells per path");

  // realized
  auto* realized = app.add_subcommand("realized", "realized cumulants of CSV paths");
  realized->fallthrough();
  std::string input_file;
  realized->add_option("--input", input_file, "path CSV file")->required();
  realized->add_option("--order", order, "statistic order n (value has order n+1)");

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->fallthrough();
  std::string suite;
  std::string tree_file;
  int depth = 3;
  double bias_constant = -1.0;
  verify->add_option("suite", suite, "aggregation | unbiased | recursion | bell-identities")
      ->required();
  verify->add_option("--model", model_name, "poisson | expmart | brownian");
  verify->add_option("--tree", tree_file, "tree model JSON file");
  verify->add_option("--depth", depth, "built-in binomial tree depth");
  verify->add_option("--order", order, "statistic order n");
  verify->add_option("--paths", n_paths, "Monte Carlo paths");
  verify->add_option("--grid", grid, "grid cells per path");
  verify->add_option("--lambda", lambda, "poisson intensity");
  verify->add_option("--horizon", horizon, "time horizon T");
  verify->add_option("--bias-constant", bias_constant,
                     "recursion bias constant C (gate adds C/grid); negative = model default");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (const char* env_seed = std::getenv("REALIZED_CUMULANTS_SEED")) {
    config.seed = std::strtoull(env_seed, nullptr, 10);
  }

  if (bell_eval->parsed()) {
    const std::vector<double> x = parse_values(bell_inputs);
    ordered_json j;
    j["order"] = x.size();
    j["input"] = x;
    j["value"] = rcum::bell_value(x, config.n_max);
    emit(config, j);
    return 0;
  }

  if (bell_terms_cmd->parsed()) {
    ordered_json j;
    j["order"] = bell_order;
    ordered_json terms = ordered_json::array();
    for (const rcum::BellTerm& term : rcum::bell_terms(bell_order, config.n_max)) {
      ordered_json t;
      t["coefficient"] = term.coefficient;
      ordered_json exps = ordered_json::array();
      std::string monomial;
      for (std::size_t i = 0; i < term.exponents.size(); ++i) {
        if (term.exponents[i] == 0) continue;
        exps.push_back({i + 1, term.exponents[i]});
        if (!monomial.empty()) monomial += " ";
        monomial += "x" + std::to_string(i + 1);
        if (term.exponents[i] > 1) monomial += "^" + std::to_string(term.exponents[i]);
      }
      t["exponents"] = std::move(exps);
      t["monomial"] = monomial;
      terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    j["coefficient_sum"] = rcum::bell_number(bell_order, config.n_max);
    emit(config, j);
    return 0;
  }

  if (m2c->parsed() || c2m->parsed()) {
    const std::vector<double> values = parse_values(convert_inputs);
    ordered_json j;
    j["order"] = values.size();
    j["input"] = values;
    if (m2c->parsed()) {
      rcum::MomentVector m;
      m.values = values;
      j["output"] = rcum::moments_to_cumulants(m, config.n_max).values;
    } else {
      rcum::CumulantVector k;
      k.values = values;
      j["output"] = rcum::cumulants_to_moments(k, config.n_max).values;
    }
    emit(config, j);
    return 0;
  }

  if (simulate->parsed()) {
    const rcum::SimulatorSpec spec{rcum::simulator_kind_from_name(model_name),
                                   lambda, horizon};
    std::vector<rcum::NamedPath> paths;
    paths.reserve(n_paths);
    for (std::uint64_t pid = 0; pid < n_paths; ++pid) {
      paths.emplace_back(std::to_string(pid),
                         rcum::simulate_path(spec, order, grid, config.seed, pid));
    }
    if (config.out.empty()) {
      rcum::export_paths(std::cout, paths);
    } else {
      rcum::export_paths_file(config.out, paths);
    }
    return 0;
  }

  if (realized->parsed()) {
    const std::vector<rcum::NamedPath> paths = rcum::ingest_paths_file(input_file);
    ordered_json j;
    j["order"] = order;
    ordered_json list = ordered_json::array();
    std::vector<double> values;
    values.reserve(paths.size());
    for (const rcum::NamedPath& p : paths) {
      const rcum::RealizedStatistic stat =
          rcum::realized_cumulant(p.second, order, config.n_max);
      ordered_json entry = rcum::to_json(stat);
      entry["path_id"] = p.first;
      list.push_back(std::move(entry));
      values.push_back(stat.value);
    }
    const rcum::SampleStats stats = rcum::summarize(values);
    j["paths"] = std::move(list);
    j["mean"] = stats.mean;
    j["standard_error"] = stats.standard_error;
    emit(config, j);
    return 0;
  }

  if (verify->parsed()) {
    if (verify->count("--paths") == 0) {
      n_paths = suite == "recursion" ? 10000 : 100000;
    }
    if (verify->count("--grid") == 0) {
      grid = suite == "recursion" ? 512 : 16;
    }
    std::vector<rcum::VerificationReport> reports;
    if (suite == "bell-identities") {
      reports = rcum::bell_identities_suite(config.seed);
    } else if (suite == "aggregation") {
      const rcum::TreeModel model =
          tree_file.empty() ? rcum::TreeModel::symmetric_binomial(depth)
                            : rcum::TreeModel::from_json_file(tree_file);
      reports = rcum::tree_exact_suite(model, order);
    } else if (suite == "unbiased") {
      const rcum::SimulatorSpec spec{rcum::simulator_kind_from_name(model_name),
                                     lambda, horizon};
      reports.push_back(rcum::unbiasedness_mc(spec, order, n_paths, grid,
                                              config.seed, mc_options(config)));
    } else if (suite == "recursion") {
      const rcum::SimulatorSpec spec{rcum::simulator_kind_from_name(model_name),
                                     lambda, horizon};
      reports.push_back(rcum::recursion_check(spec, order, n_paths, grid,
                                              config.seed, mc_options(config),
                                              bias_constant));
    } else {
      std::cerr << "unknown suite: " << suite << "\n";
      return 2;
    }
    const ordered_json j = rcum::suite_json(suite, reports);
    emit(config, j);
    return rcum::all_pass(reports) ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
