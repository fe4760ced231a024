#include <algorithm>
#include <map>

#include "alcove/cli/commands.hpp"
#include "alcove/errors.hpp"
#include "alcove/hypersimplex.hpp"
#include "alcove/multi_eulerian.hpp"

namespace alcove::cli {

using nlohmann::json;

namespace {

constexpr std::size_t kMaxListedFailures = 10;

Int uniform(std::mt19937_64& rng, Int lo, Int hi) {
  return lo + static_cast<Int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

struct Family {
  explicit Family(std::string n) : name(std::move(n)) {}

  std::string name;
  Int checked = 0;
  Int failed = 0;
  std::vector<std::string> failures;

  void record(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    ++failed;
    if (failures.size() < kMaxListedFailures) failures.push_back(what);
  }

  json to_json() const {
    return json{{"family", name}, {"checked", checked}, {"failed", failed}, {"failures", failures}, {"passed", failed == 0}};
  }
};

std::string hs(int k, int n) { return "Delta(" + std::to_string(k) + "," + std::to_string(n) + ")"; }

void verify_hypersimplices(int max_n, std::vector<Family>& out) {
  Family tri{"hypersimplex-triangulations"};
  Family theta_family{"theta-circuit-labels"};
  Family lattice{"hypersimplex-lattice-sum"};
  for (int n = 2; n <= max_n; ++n)
    for (int k = 1; k < n; ++k) {
      const HypersimplexId id(k, n);
      const auto circuit = triangulate(id, HypersimplexMethod::circuit);
      const bool agree = triangulate(id, HypersimplexMethod::stanley) == circuit &&
                         triangulate(id, HypersimplexMethod::sorted) == circuit &&
                         triangulate(id, HypersimplexMethod::alcove) == circuit &&
                         static_cast<Int>(circuit.size()) == eulerian_number(k, n - 1);
      tri.record(agree, hs(k, n));

      std::map<Simplex, std::vector<int>> labels;
      for (const auto& c : enumerate_minimal_circuits(id)) labels[c.simplex()] = c.labels;
      for (const auto& coll : enumerate_sorted_collections(id, true)) {
        std::vector<Point> vs;
        for (const auto& s : coll) vs.push_back(indicator(s));
        auto it = labels.find(Simplex(vs));
        const bool ok = it != labels.end() && theta(coll) == Permutation(it->second);
        theta_family.record(ok, hs(k, n) + " cell " + theta(coll).word());
      }

      const Int by_lattice = volume(AlcovedSpec::hypersimplex(k, n), VolumeMethod::lattice_sum);
      lattice.record(by_lattice == static_cast<Int>(circuit.size()), hs(k, n));
    }
  out.push_back(tri);
  out.push_back(theta_family);
  out.push_back(lattice);
}

void verify_random_alcoved(int count, std::uint64_t seed, std::vector<Family>& out) {
  Family fam{"alcoved-random-volumes"};
  std::mt19937_64 rng(seed);
  for (int t = 0; t < count; ++t) {
    const AlcovedDocument doc = random_alcoved_document(rng, 5);
    const AlcovedSpec spec = doc.spec();
    const Int circuit = volume(spec, VolumeMethod::circuit);
    bool ok = volume(spec, VolumeMethod::lattice_sum) == circuit;
    if (spec.unit_cube()) ok = ok && volume(spec, VolumeMethod::descent) == circuit;
    fam.record(ok, to_json(doc).dump());
  }
  out.push_back(fam);
}

void verify_identities(int max_m, std::vector<Family>& out) {
  Family des{"derivative-identity"};
  for (int m = 1; m <= max_m; ++m) des.record(derivative_identity(m), "m=" + std::to_string(m));

  Family anchored{"anchored-two-block"};
  for (int s = 1; s <= max_m; ++s) {
    std::vector<int> parts{2};
    parts.insert(parts.end(), static_cast<std::size_t>(s), 1);
    const auto poly = multi_eulerian_polynomial(WeightedSetPartition::unweighted(parts), MultiEulerianMethod::alcoved_volume);
    anchored.record(poly == eulerian_polynomial(s).derivative().shifted(1), "s=" + std::to_string(s));
  }

  Family hook{"hook-formula"};
  for (int n = 2; n <= max_m + 1; ++n)
    for (int a = 1; a < n; ++a) {
      std::vector<int> parts{a};
      parts.insert(parts.end(), static_cast<std::size_t>(n - a), 1);
      const auto poly = multi_eulerian_polynomial(WeightedSetPartition::unweighted(parts), MultiEulerianMethod::alcoved_volume);
      hook.record(poly == hook_formula(a, n), "a=" + std::to_string(a) + " n=" + std::to_string(n));
    }

  Family bij{"marked-descent-bijection"};
  for (int m = 2; m <= std::min(max_m, 7); ++m) {
    std::set<Permutation> images;
    Int expected = 0;
    for_each_permutation(m, [&](const Permutation& u) {
      if (u(m) != m) return;
      for (int i = 1; i <= m; ++i) {
        const int next = i == m ? u(1) : u(i + 1);
        if (u(i) < next) continue;
        const MarkedPermutation marked(u, i);
        const Permutation w = marked_descent_bijection(marked);
        ++expected;
        images.insert(w);
        const bool ok = marked_descent_inverse(w) == marked && circular_descent_count(w) == circular_descent_count(u);
        bij.record(ok, u.word() + " mark " + std::to_string(i));
      }
    });
    bij.record(static_cast<Int>(images.size()) == expected, "injective m=" + std::to_string(m));
  }
  out.push_back(des);
  out.push_back(anchored);
  out.push_back(hook);
  out.push_back(bij);
}

}  // namespace

AlcovedDocument random_alcoved_document(std::mt19937_64& rng, int max_n) {
  AlcovedDocument doc;
  doc.n = static_cast<int>(uniform(rng, 2, max_n));
  const int n = doc.n;
  std::map<std::pair<int, int>, BoundEntry> bounds;
  if (rng() % 2 == 0) {
    doc.unit_cube = true;
    doc.level = uniform(rng, 1, n - 1);
  } else {
    doc.level = uniform(rng, -2, 4);
    for (int j = 1; j < n; ++j) {
      const Int lo = uniform(rng, -2, 2);
      bounds[{0, j}] = BoundEntry{0, j, lo, lo + uniform(rng, 0, 3)};
    }
  }
  const Int extra = uniform(rng, 0, 2);
  for (Int t = 0; t < extra && n > 2; ++t) {
    int i = static_cast<int>(uniform(rng, 0, n - 2));
    int j = static_cast<int>(uniform(rng, i + 1, n - 1));
    const Int span = j - i;
    const Int lo = uniform(rng, doc.unit_cube ? 0 : -2, span);
    const Int hi = lo + uniform(rng, 0, 2);
    auto [it, fresh] = bounds.try_emplace({i, j}, BoundEntry{i, j, lo, hi});
    if (!fresh) {
      // Tighten an existing interval, keeping it non-empty.
      it->second.lo = std::max(*it->second.lo, std::min(lo, *it->second.hi));
    }
  }
  for (auto& [_, b] : bounds) doc.bounds.push_back(b);
  return doc;
}

json verify_report(const VerifyOptions& options) {
  std::vector<Family> families;
  if (options.hypersimplex) verify_hypersimplices(*options.hypersimplex, families);
  if (options.alcoved_random) verify_random_alcoved(*options.alcoved_random, options.seed, families);
  if (options.identities) verify_identities(*options.identities, families);
  json report;
  report["families"] = json::array();
  bool passed = true;
  for (const auto& f : families) {
    report["families"].push_back(f.to_json());
    passed = passed && f.failed == 0;
  }
  report["passed"] = passed;
  return report;
}

Output run_verify(const VerifyOptions& options) {
  if (!options.hypersimplex && !options.alcoved_random && !options.identities)
    return Output{kUsage, "", "choose at least one of --hypersimplex, --alcoved-random, --identities\n"};
  if (options.hypersimplex && (*options.hypersimplex < 2 || *options.hypersimplex > 9))
    return Output{kUsage, "", "--hypersimplex must lie in [2, 9]\n"};
  if (options.alcoved_random && *options.alcoved_random < 1)
    return Output{kUsage, "", "--alcoved-random must be positive\n"};
  if (options.identities && (*options.identities < 1 || *options.identities > 8))
    return Output{kUsage, "", "--identities must lie in [1, 8]\n"};
  const json report = verify_report(options);
  return Output{report["passed"].get<bool>() ? kOk : kVerification, report.dump(2) + "\n", ""};
}

}  // namespace alcove::cli
