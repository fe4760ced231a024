#include "alcove/sorting_ideal.hpp"

#include <algorithm>

#include "alcove/errors.hpp"

namespace alcove {

namespace {
constexpr std::size_t kStepCap = 1'000'000;
}

Monomial::Monomial(std::vector<Multiset> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw ArgumentError("monomial needs at least one factor");
  for (const auto& f : factors_)
    if (f.size() != factors_[0].size() || f.n() != factors_[0].n())
      throw ArgumentError("monomial factors must share size and ground set");
  std::sort(factors_.begin(), factors_.end());
}

std::vector<int> Monomial::content() const {
  std::vector<int> all;
  for (const auto& f : factors_) all.insert(all.end(), f.elements().begin(), f.elements().end());
  std::sort(all.begin(), all.end());
  return all;
}

std::string Monomial::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += '*';
    s += 'x' + factors_[i].label();
  }
  return s;
}

Reduction reduce_to_normal_form(const Monomial& m, const std::set<Multiset>& ground, const PairChooser& choose) {
  for (const auto& f : m.factors())
    if (!ground.contains(f)) throw ArgumentError("factor x" + f.label() + " is not in the ground collection");
  std::vector<Multiset> factors = m.factors();
  std::size_t steps = 0;
  while (true) {
    std::vector<std::pair<std::size_t, std::size_t>> unsorted;
    for (std::size_t a = 0; a < factors.size(); ++a)
      for (std::size_t b = a + 1; b < factors.size(); ++b)
        if (!is_sorted_pair(factors[a], factors[b])) unsorted.emplace_back(a, b);
    if (unsorted.empty()) break;
    std::size_t pick = choose ? choose(unsorted.size()) : 0;
    if (pick >= unsorted.size()) throw ArgumentError("pair chooser returned an out-of-range index");
    auto [a, b] = unsorted[pick];
    auto [u, v] = sort_pair(factors[a], factors[b]);
    if (!ground.contains(u) || !ground.contains(v))
      throw NotSortClosedError("sorting x" + factors[a].label() + "*x" + factors[b].label() + " gives x" + u.label() +
                               "*x" + v.label() + " outside the ground collection");
    factors[a] = std::move(u);
    factors[b] = std::move(v);
    std::sort(factors.begin(), factors.end());
    if (++steps > kStepCap) throw ComputationError("sorting reduction did not terminate");
  }
  return {Monomial(std::move(factors)), steps};
}

Monomial normal_form(const Monomial& m, const std::vector<Multiset>& ground) {
  return reduce_to_normal_form(m, std::set<Multiset>(ground.begin(), ground.end())).result;
}

Monomial dealt_normal_form(const Monomial& m) {
  const std::size_t d = m.degree();
  std::vector<std::vector<int>> parts(d);
  std::vector<int> all = m.content();
  for (std::size_t i = 0; i < all.size(); ++i) parts[i % d].push_back(all[i]);
  std::vector<Multiset> factors;
  for (auto& p : parts) factors.emplace_back(std::move(p), m.n());
  return Monomial(std::move(factors));
}

bool is_standard(const Monomial& m, const std::vector<Multiset>& ground) {
  std::set<Multiset> g(ground.begin(), ground.end());
  for (const auto& f : m.factors())
    if (!g.contains(f)) throw ArgumentError("factor x" + f.label() + " is not in the ground collection");
  return is_sorted_chain(m.factors());
}

std::vector<MarkedBinomial> groebner_generators(const std::vector<Multiset>& ground) {
  std::vector<Multiset> g = ground;
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  std::set<Multiset> present(g.begin(), g.end());
  std::vector<MarkedBinomial> out;
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = a + 1; b < g.size(); ++b) {
      if (is_sorted_pair(g[a], g[b])) continue;
      auto [u, v] = sort_pair(g[a], g[b]);
      if (!present.contains(u) || !present.contains(v))
        throw NotSortClosedError("ground is not sort-closed: sorting x" + g[a].label() + "*x" + g[b].label() +
                                 " leaves it");
      out.push_back(MarkedBinomial{Monomial({g[a], g[b]}), Monomial({u, v})});
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool same_toric_fiber(const Monomial& a, const Monomial& b) {
  if (a.k() != b.k() || a.n() != b.n() || a.degree() != b.degree())
    throw ArgumentError("toric fiber comparison needs equal size, ground set and degree");
  return a.content() == b.content();
}

}  // namespace alcove
