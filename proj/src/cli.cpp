#include "clusterdenom/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

#include "clusterdenom/errors.hpp"
#include "clusterdenom/report.hpp"

namespace clusterdenom::cli {

namespace {

struct Config {
  std::string type_name;
  std::string matrix_path;
  std::string out_path;
  std::string checkpoint_path;
  bool extended = false;
  unsigned jobs = 1;
  double max_seconds = 0;
  double checkpoint_seconds = 60;
  std::size_t class_budget = 1'000'000;
  std::size_t node_budget = 1'000'000;
  int n = 0;
  int bound = 2;
  std::string triangulations = "all";
  std::uint64_t seed = 0x5eed;
  bool list_arcs = false;
  bool list_triangulations = false;
};

ExchangeMatrix load_input(const Config& c) {
  if (!c.type_name.empty()) return standard_matrix(c.type_name);
  std::ifstream in(c.matrix_path);
  if (!in) throw std::ios_base::failure("cannot open " + c.matrix_path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw InvalidMatrix(std::string("cannot parse ") + c.matrix_path + ": " + e.what());
  }
  return matrix_from_json(j);
}

void write_json(const Json& j, const std::string& path, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::ios_base::failure("cannot write " + path);
  f << text;
}

int do_verify(const Config& c, std::ostream& out, std::ostream& err) {
  const ExchangeMatrix b = load_input(c);
  VerifyOptions opts;
  opts.engine = c.extended ? Engine::Recurrence : Engine::Laurent;
  opts.jobs = c.jobs;
  opts.class_budget = c.class_budget;
  opts.node_budget = c.node_budget;
  if (c.max_seconds > 0) {
    opts.time_limit = std::chrono::duration_cast<std::chrono::steady_clock::duration>(
        std::chrono::duration<double>(c.max_seconds));
  }
  opts.checkpoint_interval = std::chrono::duration_cast<std::chrono::steady_clock::duration>(
      std::chrono::duration<double>(c.checkpoint_seconds));
  std::string checkpoint = c.checkpoint_path;
  if (checkpoint.empty() && c.extended && !c.out_path.empty()) checkpoint = c.out_path + ".checkpoint";
  if (!checkpoint.empty() || c.extended) {
    opts.on_checkpoint = [&](const Report& r, const Progress& p) {
      const bool done = p.class_index < r.classes.size() && r.classes[p.class_index].completed;
      err << "class " << p.class_index + 1 << "/" << p.class_count << (done ? " done: " : " running: ") << p.clusters
          << " clusters, " << p.systems_checked << " systems, " << p.findings << " findings\n";
      if (!checkpoint.empty()) {
        Json j = to_json(r);
        j["verdict"] = "in-progress";
        write_json(j, checkpoint, out);
      }
    };
  }
  const Report r = verify(b, opts);
  write_json(to_json(r), c.out_path, out);
  if (!c.out_path.empty()) out << to_string(r.verdict) << "\n";
  switch (r.verdict) {
    case Verdict::Verified: return kOk;
    case Verdict::Counterexample: return kFailure;
    case Verdict::BudgetExceeded: return kBudget;
  }
  return kFailure;
}

int do_enumerate(const Config& c, std::ostream& out) {
  const ExchangeMatrix b = load_input(c);
  const auto p = explore(b, {c.extended ? Engine::Recurrence : Engine::Laurent, c.node_budget});
  write_json(to_json(p, c.type_name.empty() ? c.matrix_path : c.type_name), c.out_path, out);
  return kOk;
}

int do_disc(const Config& c, std::ostream& out) {
  Json j = {{"schema_version", kReportSchemaVersion}, {"n", c.n}};
  if (c.list_arcs) {
    Json arcs = Json::array();
    for (const auto& a : disc::all_tagged_arcs(c.n)) arcs.push_back(disc::to_json(a));
    j["arcs"] = arcs;
  } else {
    Json ts = Json::array();
    for (const auto& t : disc::tagged_triangulations(c.n)) {
      Json arcs = Json::array();
      for (const auto& a : t.arcs()) arcs.push_back(disc::to_json(a));
      ts.push_back(arcs);
    }
    j["triangulations"] = ts;
  }
  write_json(j, c.out_path, out);
  return kOk;
}

int do_disc_check(const Config& c, std::ostream& out) {
  std::optional<std::size_t> sample;
  if (c.triangulations != "all") {
    try {
      std::size_t pos = 0;
      const long k = std::stol(c.triangulations, &pos);
      if (pos != c.triangulations.size() || k < 1) throw std::invalid_argument("bad count");
      sample = static_cast<std::size_t>(k);
    } catch (const std::logic_error&) {
      throw InvalidArgument("--triangulations expects \"all\" or a positive count");
    }
  }
  const auto r = reconstruct::injectivity_check(c.n, c.bound, sample, c.seed);
  write_json(to_json(r), c.out_path, out);
  return r.collisions.empty() ? kOk : kFailure;
}

int do_crosscheck(const Config& c, std::ostream& out) {
  const auto t = reconstruct::fst_crosscheck(c.n, c.bound);
  write_json(to_json(t), c.out_path, out);
  return t.ok() ? kOk : kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Denominator checks for finite-type cluster algebras", "clusterdenom"};
  app.require_subcommand(0, 1);
  bool show_version = false;
  app.add_flag("--version", show_version, "Print the version and report schema");
  Config c;

  auto* verify_cmd = app.add_subcommand("verify", "Check every D-matrix and every pairwise system of a mutation class");
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Explore the cluster pattern and print its D-matrices");
  for (auto* cmd : {verify_cmd, enumerate_cmd}) {
    auto* type_opt = cmd->add_option("--type", c.type_name, "Cartan type such as A3, F4, E6");
    auto* matrix_opt = cmd->add_option("--matrix", c.matrix_path, "Exchange matrix JSON file");
    type_opt->excludes(matrix_opt);
    matrix_opt->excludes(type_opt);
    cmd->add_flag("--extended", c.extended, "Use the d-vector recurrence instead of Laurent expansions");
    cmd->add_option("--out", c.out_path, "Write the JSON report here instead of standard output");
    cmd->add_option("--node-budget", c.node_budget, "Maximum seeds per pattern")->check(CLI::PositiveNumber);
  }
  verify_cmd->add_option("--jobs", c.jobs, "Worker threads for the pairwise stage")->check(CLI::Range(1U, 1024U));
  verify_cmd->add_option("--max-seconds", c.max_seconds, "Stop with verdict budget-exceeded after this long")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--checkpoint", c.checkpoint_path, "Rewrite a partial report here after every class");
  verify_cmd->add_option("--checkpoint-seconds", c.checkpoint_seconds, "Interval between checkpoints inside a class")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--class-budget", c.class_budget, "Maximum matrices in the mutation class")
      ->check(CLI::PositiveNumber);

  auto* disc_cmd = app.add_subcommand("disc", "Tagged arcs and triangulations of the once-punctured disc");
  disc_cmd->add_option("--n", c.n, "Number of marked points")->required();
  auto* arcs_flag = disc_cmd->add_flag("--list-arcs", c.list_arcs);
  auto* tri_flag = disc_cmd->add_flag("--list-triangulations", c.list_triangulations);
  arcs_flag->excludes(tri_flag);
  tri_flag->excludes(arcs_flag);
  disc_cmd->add_option("--out", c.out_path);

  auto* check_cmd = app.add_subcommand("disc-check", "Injectivity of intersection vectors");
  check_cmd->add_option("--n", c.n)->required();
  check_cmd->add_option("--bound", c.bound, "Largest total multiplicity")->check(CLI::PositiveNumber);
  check_cmd->add_option("--triangulations", c.triangulations, "\"all\" or how many to sample");
  check_cmd->add_option("--seed", c.seed, "Sampling seed");
  check_cmd->add_option("--out", c.out_path);

  auto* cross_cmd = app.add_subcommand("crosscheck", "Match intersection vectors with d-vectors of the D_n algebra");
  cross_cmd->add_option("--n", c.n)->required();
  cross_cmd->add_option("--bound", c.bound, "Largest multiset checked against Laurent expansions")
      ->check(CLI::NonNegativeNumber);
  cross_cmd->add_option("--out", c.out_path);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (show_version) {
    out << version_string() << "\n";
    return kOk;
  }
  try {
    if (verify_cmd->parsed() || enumerate_cmd->parsed()) {
      if (c.type_name.empty() && c.matrix_path.empty()) {
        err << "error: give --type or --matrix\n";
        return kUsage;
      }
      return verify_cmd->parsed() ? do_verify(c, out, err) : do_enumerate(c, out);
    }
    if (disc_cmd->parsed()) {
      if (!c.list_arcs && !c.list_triangulations) {
        err << "error: give --list-arcs or --list-triangulations\n";
        return kUsage;
      }
      return do_disc(c, out);
    }
    if (check_cmd->parsed()) return do_disc_check(c, out);
    if (cross_cmd->parsed()) return do_crosscheck(c, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  err << app.help();
  return kUsage;
}

}  // namespace clusterdenom::cli
