// Runs the twelve acceptance criteria and prints one PASS/FAIL line for each.
// All comparisons are exact integer or string equality.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "alcove/cli/commands.hpp"
#include "alcove/errors.hpp"
#include "alcove/hypersimplex.hpp"
#include "alcove/multi_eulerian.hpp"
#include "alcove/rank_two.hpp"
#include "alcove/sorting_ideal.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace alcove;

namespace {

// Collects the first few failures of one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (ok) return;
    ++failed_;
    if (failed_ <= 3) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  bool ok() const { return failed_ == 0 && total_ > 0; }
  std::string summary() const {
    std::ostringstream s;
    s << total_ - failed_ << "/" << total_ << " checks";
    if (!notes_.empty()) s << ": " << notes_;
    return s.str();
  }

 private:
  long total_ = 0;
  long failed_ = 0;
  std::string notes_;
};

std::string str(Int v) { return std::to_string(v); }

std::vector<int> ones(int n) { return std::vector<int>(static_cast<std::size_t>(n), 1); }

void for_each_composition(int n, const std::function<void(const std::vector<int>&)>& visit) {
  std::function<void(std::vector<int>, int)> rec = [&](std::vector<int> parts, int left) {
    if (left == 0) {
      visit(parts);
      return;
    }
    for (int a = 1; a <= left; ++a) {
      auto next = parts;
      next.push_back(a);
      rec(next, left - a);
    }
  };
  rec({}, n);
}

void for_each_weighted(int n, const std::function<void(const WeightedSetPartition&)>& visit) {
  for_each_composition(n, [&](const std::vector<int>& parts) {
    std::vector<int> b(parts.size()), c(parts.size());
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
      if (j == parts.size()) {
        visit(WeightedSetPartition(parts, b, c));
        return;
      }
      for (int x = 0; x <= parts[j]; ++x)
        for (int y = x; y <= parts[j]; ++y) {
          b[j] = x;
          c[j] = y;
          rec(j + 1);
        }
    };
    rec(0);
  });
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Check four_way_triangulations() {
  Check c;
  for (int n = 2; n <= 8; ++n)
    for (int k = 1; k < n; ++k) {
      const HypersimplexId id(k, n);
      auto stanley = triangulate(id, HypersimplexMethod::stanley);
      auto sorted = triangulate(id, HypersimplexMethod::sorted);
      auto circuit = triangulate(id, HypersimplexMethod::circuit);
      auto alc = triangulate(id, HypersimplexMethod::alcove);
      for (auto* v : {&stanley, &sorted, &circuit, &alc}) std::sort(v->begin(), v->end());
      const std::string at = "k=" + str(k) + " n=" + str(n);
      c.expect(stanley == sorted && sorted == circuit && circuit == alc, "cell sets differ at " + at);
      c.expect(static_cast<Int>(circuit.size()) == oracle::eulerian(k, n - 1), "cell count at " + at);
    }
  return c;
}

Check small_dual_graphs() {
  Check c;
  const std::pair<int, const char*> cases[] = {{2, "gamma_2_4.dot"}, {1, "gamma_1_4.dot"}, {3, "gamma_3_4.dot"}};
  for (const auto& [k, file] : cases) {
    const auto out = cli::run_graph(cli::HypersimplexDocument{k, 4}, "dot");
    c.expect(out.exit_code == cli::kOk && out.out == read_file(std::string(ALCOVE_GOLDEN_DIR) + "/" + file),
             std::string("DOT differs from ") + file);
  }
  const auto g = dual_graph(HypersimplexId(2, 4));
  c.expect(g.labels == std::vector<std::string>{"1324", "2134", "2314", "3124"}, "Gamma_{2,4} labels");
  c.expect(g.edge_count() == 4 && g.degree_histogram() == std::map<int, Int>{{2, 4}}, "Gamma_{2,4} is not a 4-cycle");
  c.expect(dual_graph(HypersimplexId(1, 4)).labels == std::vector<std::string>{"1234"}, "Gamma_{1,4}");
  c.expect(dual_graph(HypersimplexId(3, 4)).labels == std::vector<std::string>{"3214"}, "Gamma_{3,4}");
  return c;
}

Check dual_graph_2_5() {
  Check c;
  const auto g = dual_graph(HypersimplexId(2, 5));
  c.expect(g.node_count() == 11, "node count " + str(static_cast<Int>(g.node_count())));
  c.expect(g.edge_count() == 15, "edge count " + str(static_cast<Int>(g.edge_count())));
  c.expect(g.degree_histogram() == std::map<int, Int>{{2, 5}, {3, 5}, {5, 1}}, "degree histogram");
  const auto d = g.degrees();
  std::vector<std::string> internal;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] == 5) internal.push_back(g.labels[i]);
  c.expect(internal == std::vector<std::string>{"31425"}, "internal cell");
  const auto out = cli::run_graph(cli::HypersimplexDocument{2, 5}, "dot");
  c.expect(out.out == read_file(std::string(ALCOVE_GOLDEN_DIR) + "/gamma_2_5.dot"), "DOT differs from gamma_2_5.dot");
  return c;
}

Check lattice_sum_volume(std::vector<gen::AlcovedCase>& randoms) {
  Check c;
  for (int n = 2; n <= 7; ++n)
    for (int k = 1; k < n; ++k) {
      const auto spec = AlcovedSpec::hypersimplex(k, n);
      const auto r = volume_by_lattice_sum(spec);
      bool zero_one = true;
      for (const auto& t : r.terms) zero_one = zero_one && (t.count == 0 || t.count == 1);
      const std::string at = "Delta_{" + str(k) + "," + str(n) + "}";
      c.expect(zero_one, "term outside {0,1} at " + at);
      c.expect(r.total == volume(spec, VolumeMethod::circuit), "lattice sum at " + at);
      c.expect(r.total == oracle::eulerian(k, n - 1), "Eulerian number at " + at);
    }
  gen::Rng rng(20240);
  int nonempty = 0;
  for (int t = 0; t < 150; ++t) {
    randoms.push_back(gen::alcoved(rng, 5));
    const auto& rc = randoms.back();
    const Int circuit = volume(rc.spec, VolumeMethod::circuit);
    const Int ehrhart = oracle::alcoved_volume(rc.plain);
    c.expect(volume(rc.spec, VolumeMethod::lattice_sum) == circuit, "random spec " + str(t) + " lattice sum");
    c.expect(circuit == ehrhart, "random spec " + str(t) + " Ehrhart");
    nonempty += circuit > 0;
  }
  c.expect(nonempty >= 50, "only " + str(nonempty) + " nonempty random specs");
  return c;
}

Check descent_volume(const std::vector<gen::AlcovedCase>& randoms) {
  Check c;
  int tested = 0;
  for (const auto& rc : randoms) {
    if (!rc.spec.unit_cube()) continue;
    ++tested;
    c.expect(volume(rc.spec, VolumeMethod::descent) == volume(rc.spec, VolumeMethod::circuit),
             "unit-cube random spec n=" + str(rc.plain.n));
  }
  for (int n = 2; n <= 7; ++n)
    for (int k = 1; k < n; ++k) {
      const auto spec = AlcovedSpec::hypersimplex(k, n);
      c.expect(static_cast<Int>(restricted_permutations(spec).size()) == volume(spec, VolumeMethod::circuit),
               "Delta_{" + str(k) + "," + str(n) + "}");
    }
  c.expect(tested >= 30, "only " + str(tested) + " unit-cube specs");
  const auto w = restricted_permutations(wsp_spec(WeightedSetPartition::unweighted({2, 1, 1}), 2));
  c.expect(w == std::vector<Permutation>{Permutation::parse("132"), Permutation::parse("231")}, "W for Pi(2,1,1)");
  return c;
}

Multiset complement(const Multiset& s) {
  std::vector<int> out;
  for (int e = 1; e <= s.n(); ++e)
    if (!std::binary_search(s.elements().begin(), s.elements().end(), e)) out.push_back(e);
  return make_subset(out, s.n());
}

Check matroid_volumes() {
  Check c;
  for (int n = 2; n <= 6; ++n)
    for_each_weighted(n, [&](const WeightedSetPartition& p) {
      for (int k = 1; k < n; ++k) {
        const auto expected = oracle::wsp_bases(p.parts, p.b, p.c, k);
        auto [dual, dk] = wsp_dual(p, k);
        if (expected.empty()) {
          bool threw = false;
          try {
            wsp_bases(p, k);
          } catch (const EmptyMatroidError&) {
            threw = true;
          }
          c.expect(threw, "empty matroid not reported");
          continue;
        }
        const auto m = wsp_bases(p, k);
        std::vector<oracle::Word> got;
        for (const auto& b : m.bases) got.push_back(b.elements());
        c.expect(got == expected, "bases differ from the filter");
        c.expect(is_matroid(m.bases), "exchange axiom");
        c.expect(is_sort_closed(m.bases), "sort closure");
        const AlcovedSpec spec = wsp_spec(p, k);
        const Int alcoved = volume(spec, VolumeMethod::circuit);
        if (polytope_dimension(m) == n - 1) c.expect(matroid_volume(m) == alcoved, "matroid volume");
        else c.expect(alcoved == 0, "lower-dimensional slice has volume");
        std::vector<Multiset> comp;
        for (const auto& b : m.bases) comp.push_back(complement(b));
        std::sort(comp.begin(), comp.end());
        c.expect(wsp_bases(dual, dk).bases == comp, "dual bases are not the complements");
        c.expect(wsp_dual(dual, dk) == std::pair{p, k}, "duality is not an involution");
      }
    });
  for (int n = 2; n <= 8; ++n)
    for (int k = 1; k < n; ++k)
      c.expect(matroid_volume(Matroid::from_bases(all_subsets(n, k), n)) == oracle::eulerian(k, n - 1),
               "uniform " + str(k) + "," + str(n));
  // Every multiset of cyclic intervals on [n], n <= 5.
  for (int n = 2; n <= 5; ++n) {
    std::vector<std::pair<int, int>> intervals;
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b) intervals.emplace_back(a, b);
    for (int k = 1; k < n; ++k) {
      std::vector<std::size_t> pick(static_cast<std::size_t>(k), 0);
      while (true) {
        CyclicIntervalSystem s{n, {}};
        for (auto i : pick) s.intervals.push_back(intervals[i]);
        try {
          const auto m = transversal_bases(s);
          c.expect(is_matroid(m.bases) && is_sort_closed(m.bases), "transversal n=" + str(n));
        } catch (const EmptyMatroidError&) {
        }
        std::size_t i = pick.size();
        while (i > 0 && pick[i - 1] == intervals.size() - 1) --i;
        if (i == 0) break;
        const auto v = pick[i - 1] + 1;
        for (std::size_t j = i - 1; j < pick.size(); ++j) pick[j] = v;
      }
    }
  }
  return c;
}

Check rank_two() {
  Check c;
  for (int n = 2; n <= 8; ++n)
    for_each_composition(n, [&](const std::vector<int>& parts) {
      const auto p = WeightedSetPartition::unweighted(parts);
      const Int count = static_cast<Int>(enumerate_maximal_thrackles(p).size());
      std::string at = "Pi(";
      for (int a : parts) at += str(a);
      at += ")";
      c.expect(count == oracle::thrackle_count(parts), "enumeration vs brute force at " + at);
      c.expect(volume_by_odd_cycles(p) == count, "odd-cycle formula at " + at);
      c.expect(volume_by_complement(p) == count, "complement formula at " + at);
      if (parts.size() >= 2 && n > 2) c.expect(volume(wsp_spec(p, 2), VolumeMethod::circuit) == count, "alcoved volume at " + at);
    });
  for (int n = 3; n <= 10; ++n) {
    const auto p = WeightedSetPartition::unweighted(ones(n));
    const Int expected = (Int{1} << (n - 1)) - n;
    c.expect(volume_by_odd_cycles(p) == expected && volume_by_complement(p) == expected, "Vol(Delta_{2," + str(n) + "})");
  }
  for (int n = 4; n <= 9; ++n) {
    const auto h = degree_histogram(WeightedSetPartition::unweighted(ones(n)));
    for (const auto& [degree, count] : h) {
      c.expect(!(degree >= 4 && degree % 2 == 0), "even degree " + str(degree) + " at n=" + str(n));
      if (degree > 3 && degree % 2 == 1) c.expect(count == binomial(n, degree), "histogram[" + str(degree) + "] at n=" + str(n));
    }
    for (int d = 2; 2 * d + 1 <= n; ++d) c.expect(h.count(2 * d + 1) == 1, "missing degree " + str(2 * d + 1));
    const bool internal = h.count(n) == 1 && h.at(n) == 1;
    c.expect(internal == (n % 2 == 1), "internal cell at n=" + str(n));
  }
  return c;
}

Check f_polynomial() {
  Check c;
  for (int n : {4, 5, 6}) {
    const auto check = f_polynomial_check(n);
    c.expect(check.direct == check.series, "series differs at n=" + str(n));
    const auto f = oracle::two_subset_faces(n);
    for (std::size_t i = 1; i < f.size(); ++i)
      c.expect(check.series.coefficient(static_cast<int>(i)) == f[i], "f_" + str(static_cast<Int>(i)) + " at n=" + str(n));
    c.expect(-check.series.evaluate(-1) == 1, "Euler characteristic at n=" + str(n));
  }
  c.expect(f_polynomial_check(4).series == IntPolynomial::from_coefficients({0, 6, 13, 12, 4}), "n=4 anchor");
  return c;
}

Check identities() {
  Check c;
  for (int m = 1; m <= 7; ++m) {
    IntPolynomial lhs, rhs;
    oracle::for_each_word(m, [&](const oracle::Word& w) { lhs.add_term(oracle::descents(w) + 1, w[0]); });
    const auto e = oracle::eulerian_coefficients(m);
    for (std::size_t k = 1; k < e.size(); ++k) rhs.add_term(static_cast<int>(k), static_cast<Int>(k) * e[k]);
    c.expect(lhs == rhs, "derivative identity by enumeration at m=" + str(m));
    c.expect(derivative_identity(m), "derivative identity at m=" + str(m));
  }
  c.expect(marked_descent_bijection({Permutation::parse("53162748"), 4}) == Permutation::parse("351728649"),
           "worked example");
  for (int m = 2; m <= 6; ++m) {
    std::set<Permutation> images;
    Int target = 0, missing = 0;
    for_each_permutation(m, [&](const Permutation& u) {
      if (u(m) != m) return;
      for (int i = 1; i <= m; ++i) {
        if (u(i) < (i == m ? u(1) : u(i + 1))) continue;
        const MarkedPermutation marked(u, i);
        const auto w = marked_descent_bijection(marked);
        c.expect(circular_descent_count(w) == circular_descent_count(u), "cdes at " + u.word());
        c.expect(marked_descent_inverse(w) == marked, "round trip at " + u.word());
        images.insert(w);
      }
    });
    for_each_permutation(m + 1, [&](const Permutation& w) {
      if (w(m + 1) != m + 1 || w(1) > w(2)) return;
      ++target;
      missing += images.count(w) == 0 ? 1 : 0;
    });
    c.expect(missing == 0 && target == static_cast<Int>(images.size()), "image is not the target set at m=" + str(m));
  }
  for (int s = 1; s <= 5; ++s) {
    std::vector<int> parts{2};
    parts.insert(parts.end(), static_cast<std::size_t>(s), 1);
    const auto p = WeightedSetPartition::unweighted(parts);
    const auto expected = eulerian_polynomial(s).derivative().shifted(1);
    c.expect(multi_eulerian_polynomial(p, MultiEulerianMethod::descent_word) == expected &&
                 multi_eulerian_polynomial(p, MultiEulerianMethod::alcoved_volume) == expected,
             "anchored s=" + str(s));
  }
  for (int n = 1; n <= 5; ++n)
    for_each_weighted(n, [&](const WeightedSetPartition& p) {
      const auto r = weighted_at_one(p);
      c.expect(r.enumerated == r.closed_form, "weighted at one");
    });
  return c;
}

Check sorting_normal_form() {
  Check c;
  auto S = [](std::vector<int> e, int n) { return make_subset(std::move(e), n); };
  const Monomial example({S({1, 2, 3, 5}, 6), S({2, 4, 5, 6}, 6)});
  c.expect(normal_form(example, all_subsets(6, 4)) == Monomial({S({1, 2, 4, 5}, 6), S({2, 3, 5, 6}, 6)}), "example");
  gen::Rng rng(4242);
  for (int t = 0; t < 1200; ++t) {
    const int n = static_cast<int>(gen::uniform(rng, 3, 7));
    const int k = static_cast<int>(gen::uniform(rng, 1, n - 1));
    const auto all = all_subsets(n, k);
    const std::set<Multiset> ground(all.begin(), all.end());
    std::vector<Multiset> factors;
    const auto deg = gen::uniform(rng, 1, 4);
    for (int d = 0; d < deg; ++d) factors.push_back(all[rng() % all.size()]);
    const Monomial m(factors);
    const auto first = reduce_to_normal_form(m, ground);
    const auto random = reduce_to_normal_form(m, ground, [&](std::size_t n_choices) { return rng() % n_choices; });
    std::vector<oracle::Word> words;
    for (const auto& f : factors) words.push_back(f.elements());
    std::vector<Multiset> dealt;
    for (const auto& w : oracle::deal(words)) dealt.emplace_back(w, n);
    c.expect(first.result == random.result, "order dependence on " + m.to_string());
    c.expect(first.result == Monomial(dealt), "differs from the dealt form on " + m.to_string());
    c.expect(is_standard(first.result, all), "not standard: " + first.result.to_string());
    c.expect(same_toric_fiber(m, first.result), "fiber changed on " + m.to_string());
  }
  return c;
}

Check posets_and_weights() {
  Check c;
  for (int m = 1; m <= 6; ++m) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a <= m; ++a)
      for (int b = a + 1; b <= m; ++b) pairs.emplace_back(a, b);
    std::set<std::set<std::pair<int, int>>> seen;
    for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
      Poset p{m, {}};
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1u) p.relations.insert(pairs[i]);
      if (p.transitive_closure().relations != p.relations) continue;
      if (!seen.insert(p.relations).second) continue;
      const auto cells = triangulate(from_order_poset(p), TriangulationMethod::circuit);
      c.expect(static_cast<Int>(cells.size()) == oracle::linear_extension_count(m, p.relations), "volume");
      IntPolynomial des;
      for (const auto& w : linear_extensions(p)) des.add_term(descent_count(w), 1);
      c.expect(face_polynomials(cells).second == des, "h-polynomial");
    }
  }
  for (int n = 2; n <= 5; ++n) {
    Point lambda(static_cast<std::size_t>(n), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == lambda.size()) {
        c.expect(weight_sort_closed_by_points(lambda) == weight_sort_closed_by_shape(lambda), "routes differ");
        return;
      }
      for (Int v = 0; v <= 3; ++v) {
        lambda[i] = v;
        rec(i + 1);
      }
    };
    rec(0);
  }
  for (Int a = 0; a <= 4; ++a)
    for (Int b = 0; b <= 4; ++b)
      for (Int d = 0; d <= 4; ++d) c.expect(weight_sort_closed_by_points({a, b, d}), "rank-three weight not alcoved");
  return c;
}

Check theta_labels() {
  Check c;
  for (int n = 2; n <= 8; ++n)
    for (int k = 1; k < n; ++k) {
      const HypersimplexId id(k, n);
      std::map<Simplex, Permutation> labels;
      for (const auto& cc : enumerate_minimal_circuits(id)) labels.emplace(cc.simplex(), Permutation(cc.labels));
      std::size_t seen = 0;
      for (const auto& coll : enumerate_sorted_collections(id, true)) {
        std::vector<Point> vs;
        for (const auto& s : coll) vs.push_back(indicator(s));
        const auto it = labels.find(Simplex(vs));
        c.expect(it != labels.end() && theta(coll) == it->second, "theta at k=" + str(k) + " n=" + str(n));
        ++seen;
      }
      c.expect(seen == labels.size(), "cell counts differ at k=" + str(k) + " n=" + str(n));
    }
  return c;
}

}  // namespace

int main() {
  std::vector<gen::AlcovedCase> randoms;
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
      {"four-way triangulation equality, n <= 8", four_way_triangulations},
      {"Gamma_{k,4} DOT regression", small_dual_graphs},
      {"Gamma_{2,5} regression", dual_graph_2_5},
      {"lattice-sum volume", [&] { return lattice_sum_volume(randoms); }},
      {"descent volume", [&] { return descent_volume(randoms); }},
      {"matroid volumes, sort closure, duality", matroid_volumes},
      {"rank-two volumes and degrees", rank_two},
      {"f-polynomial series", f_polynomial},
      {"permutation identities", identities},
      {"sorting normal form", sorting_normal_form},
      {"order polytopes and weight polytopes", posets_and_weights},
      {"theta equals circuit labels, n <= 8", theta_labels},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
      const Check c = criteria[i].second();
      ok = c.ok();
      detail = c.summary();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu %s (%s, %.2fs)\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), detail.c_str(), secs);
    std::fflush(stdout);
    failures += ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
