#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "alcove/cli/commands.hpp"
#include "alcove/cli/document.hpp"
#include "alcove/parallel.hpp"

using namespace alcove::cli;

namespace {

struct SpecSource {
  std::string path;
  std::string inline_json;

  void attach(CLI::App* cmd) {
    cmd->add_option("spec", path, "spec file, or - for stdin");
    cmd->add_option("--json", inline_json, "spec given inline");
  }
};

// Reads and validates the spec; on failure prints the violations and returns nullopt.
std::optional<SpecDocument> load(const SpecSource& src) {
  std::string text;
  if (!src.inline_json.empty()) {
    text = src.inline_json;
  } else if (src.path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else if (!src.path.empty()) {
    std::ifstream in(src.path);
    if (!in) {
      std::cerr << "cannot open " << src.path << "\n";
      return std::nullopt;
    }
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::cerr << "no spec given (pass a file, - for stdin, or --json)\n";
    return std::nullopt;
  }
  ParseResult r = parse_spec(text);
  for (const auto& v : r.violations) std::cerr << (v.path.empty() ? "/" : v.path) << ": " << v.message << "\n";
  return r.document;
}

int emit(const Output& o) {
  std::cout << o.out;
  std::cerr << o.err;
  return o.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alcoved polytopes, hypersimplex triangulations and related counts"};
  app.require_subcommand(1);
  unsigned jobs = 1;
  app.add_option("--jobs", jobs, "worker threads for enumeration")->check(CLI::PositiveNumber);

  SpecSource volume_src, graph_src, bases_src, gen_src, thr_src, norm_src;
  std::string method, format = "dot";
  bool all_methods = false;

  auto* volume_cmd = app.add_subcommand("volume", "normalized volume");
  volume_src.attach(volume_cmd);
  volume_cmd->add_option("--method", method, "volume method");
  volume_cmd->add_flag("--all-methods", all_methods, "run every applicable method and compare");

  auto* graph_cmd = app.add_subcommand("graph", "dual graph of the triangulation");
  graph_src.attach(graph_cmd);
  graph_cmd->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));

  auto* bases_cmd = app.add_subcommand("bases", "bases or lattice points");
  bases_src.attach(bases_cmd);
  auto* gen_cmd = app.add_subcommand("generators", "quadratic sorting binomials");
  gen_src.attach(gen_cmd);
  auto* thr_cmd = app.add_subcommand("thrackles", "maximal thrackles of a rank-two matroid with their degrees");
  thr_src.attach(thr_cmd);
  auto* norm_cmd = app.add_subcommand("normalize", "re-emit the spec in canonical JSON");
  norm_src.attach(norm_cmd);

  VerifyOptions verify;
  int hypersimplex = 0, random_count = 0, identities = 0;
  auto* verify_cmd = app.add_subcommand("verify", "cross-validation report");
  auto* hs_opt = verify_cmd->add_option("--hypersimplex", hypersimplex, "all hypersimplices with n up to N");
  auto* rnd_opt = verify_cmd->add_option("--alcoved-random", random_count, "number of random alcoved specs");
  verify_cmd->add_option("--seed", verify.seed, "seed for --alcoved-random");
  auto* id_opt = verify_cmd->add_option("--identities", identities, "descent identities up to m");

  int max_m = 0;
  std::vector<std::string> parts;
  auto* table_cmd = app.add_subcommand("table", "CSV tables");
  table_cmd->require_subcommand(1);
  auto* eulerian_cmd = table_cmd->add_subcommand("eulerian", "Eulerian numbers A(k,m)");
  eulerian_cmd->add_option("--max-m", max_m, "largest m")->required();
  auto* multi_cmd = table_cmd->add_subcommand("multi-eulerian", "multi-Eulerian numbers by k");
  multi_cmd->add_option("--parts", parts, "partition such as 2+1+1 or 2:0:1+1+1")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  alcove::set_default_jobs(jobs);

  auto with_spec = [](const SpecSource& src, auto&& run) -> int {
    auto doc = load(src);
    if (!doc) return kUsage;
    return emit(run(*doc));
  };

  if (*volume_cmd)
    return with_spec(volume_src, [&](const SpecDocument& d) { return run_volume(d, method, all_methods); });
  if (*graph_cmd) return with_spec(graph_src, [&](const SpecDocument& d) { return run_graph(d, format); });
  if (*bases_cmd) return with_spec(bases_src, run_bases);
  if (*gen_cmd) return with_spec(gen_src, run_generators);
  if (*thr_cmd) return with_spec(thr_src, run_thrackles);
  if (*norm_cmd) return with_spec(norm_src, run_normalize);
  if (*verify_cmd) {
    if (*hs_opt) verify.hypersimplex = hypersimplex;
    if (*rnd_opt) verify.alcoved_random = random_count;
    if (*id_opt) verify.identities = identities;
    return emit(run_verify(verify));
  }
  if (*eulerian_cmd) return emit(eulerian_table(max_m));
  if (*multi_cmd) return emit(multi_eulerian_table(parts));
  return kUsage;
}
