#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "alcove/cli/document.hpp"

namespace alcove::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kDomain = 2, kVerification = 3 };

struct Output {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

// Methods accepted by `volume` for this document; the first is the default.
std::vector<std::string> volume_methods(const SpecDocument& doc);
// Throws ArgumentError for an unknown method, library errors otherwise.
Int compute_volume(const SpecDocument& doc, const std::string& method);

Output run_volume(const SpecDocument& doc, const std::string& method, bool all_methods);
Output run_graph(const SpecDocument& doc, const std::string& format);
Output run_bases(const SpecDocument& doc);
Output run_generators(const SpecDocument& doc);
Output run_thrackles(const SpecDocument& doc);
Output run_normalize(const SpecDocument& doc);

std::string to_dot(const DualGraph& g);
nlohmann::json to_graph_json(const DualGraph& g);

struct VerifyOptions {
  std::optional<int> hypersimplex;
  std::optional<int> alcoved_random;
  std::uint64_t seed = 1;
  std::optional<int> identities;
};

nlohmann::json verify_report(const VerifyOptions& options);
Output run_verify(const VerifyOptions& options);

/// Bounded random alcoved spec with 2 <= n <= max_n. About half are unit-cube
/// slices; the rest pin every z_j to a short interval and add random extra
/// difference bounds.
AlcovedDocument random_alcoved_document(std::mt19937_64& rng, int max_n);

Output eulerian_table(int max_m);
/// Each entry is "a+b+..." with optional per-part weights "a:b:c".
Output multi_eulerian_table(const std::vector<std::string>& partitions);
WeightedSetPartition parse_partition(const std::string& text);

}  // namespace alcove::cli
