#include "alcove/core.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <sstream>

#include "alcove/errors.hpp"

namespace alcove {

Multiset::Multiset(std::vector<int> elements, int n) : elements_(std::move(elements)), n_(n) {
  if (n < 0) throw ArgumentError("multiset ambient size must be non-negative");
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] < 1 || elements_[i] > n)
      throw ArgumentError("multiset element " + std::to_string(elements_[i]) + " outside [1.." + std::to_string(n) + "]");
    if (i > 0 && elements_[i] < elements_[i - 1]) throw ArgumentError("multiset elements must be weakly increasing");
  }
}

Multiset Multiset::from_counts(std::span<const Int> counts) {
  std::vector<int> elements;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] < 0) throw ArgumentError("negative multiplicity");
    elements.insert(elements.end(), static_cast<std::size_t>(counts[i]), static_cast<int>(i + 1));
  }
  return Multiset(std::move(elements), static_cast<int>(counts.size()));
}

bool Multiset::is_set() const { return std::adjacent_find(elements_.begin(), elements_.end()) == elements_.end(); }

Point Multiset::counts() const {
  Point c(static_cast<std::size_t>(n_), 0);
  for (int e : elements_) ++c[static_cast<std::size_t>(e - 1)];
  return c;
}

std::string Multiset::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < elements_.size(); ++i) os << (i ? "," : "") << elements_[i];
  os << '}';
  return os.str();
}

std::string Multiset::label() const {
  if (n_ > 9) return to_string();
  std::string s;
  for (int e : elements_) s += static_cast<char>('0' + e);
  return s;
}

Multiset make_subset(std::vector<int> elements, int n) {
  Multiset m(std::move(elements), n);
  if (!m.is_set()) throw ArgumentError("subset elements must be strictly increasing");
  return m;
}

std::vector<Multiset> all_subsets(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw ArgumentError("all_subsets requires 0 <= k <= n");
  std::vector<Multiset> out;
  std::vector<int> current(static_cast<std::size_t>(k));
  std::iota(current.begin(), current.end(), 1);
  while (true) {
    out.emplace_back(current, n);
    int i = k - 1;
    while (i >= 0 && current[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) break;
    ++current[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) current[static_cast<std::size_t>(j)] = current[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

static void require_compatible(const Multiset& I, const Multiset& J) {
  if (I.size() != J.size()) throw ArgumentError("multisets of different sizes");
  if (I.n() != J.n()) throw ArgumentError("multisets over different ground sets");
}

std::pair<Multiset, Multiset> sort_pair(const Multiset& I, const Multiset& J) {
  require_compatible(I, J);
  std::vector<int> merged;
  merged.reserve(2 * I.size());
  std::merge(I.elements().begin(), I.elements().end(), J.elements().begin(), J.elements().end(), std::back_inserter(merged));
  std::vector<int> u, v;
  u.reserve(I.size());
  v.reserve(I.size());
  for (std::size_t i = 0; i < merged.size(); ++i) (i % 2 == 0 ? u : v).push_back(merged[i]);
  return {Multiset(std::move(u), I.n()), Multiset(std::move(v), I.n())};
}

bool is_sorted_pair(const Multiset& I, const Multiset& J) {
  require_compatible(I, J);
  for (std::size_t t = 0; t < I.size(); ++t) {
    if (I[t] > J[t]) return false;
    if (t + 1 < I.size() && J[t] > I[t + 1]) return false;
  }
  return true;
}

bool is_sorted_chain(std::span<const Multiset> collection) {
  if (collection.empty()) return true;
  const std::size_t k = collection[0].size();
  for (const auto& m : collection) require_compatible(collection[0], m);
  // I_11 <= I_21 <= ... <= I_r1 <= I_12 <= ... <= I_rk
  int previous = 0;
  for (std::size_t t = 0; t < k; ++t)
    for (const auto& m : collection) {
      if (m[t] < previous) return false;
      previous = m[t];
    }
  return true;
}

namespace {

// Compatibility graph on a lexicographically ordered ground: bit j of row i
// is set when i < j and (ground[i], ground[j]) is a sorted pair.
struct SortGraph {
  std::vector<Multiset> ground;
  std::size_t words = 0;
  std::vector<std::uint64_t> later;

  explicit SortGraph(std::span<const Multiset> input) : ground(input.begin(), input.end()) {
    std::sort(ground.begin(), ground.end());
    ground.erase(std::unique(ground.begin(), ground.end()), ground.end());
    const std::size_t n = ground.size();
    words = (n + 63) / 64;
    later.assign(n * words, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (is_sorted_pair(ground[i], ground[j])) later[i * words + j / 64] |= std::uint64_t{1} << (j % 64);
  }

  const std::uint64_t* row(std::size_t i) const { return later.data() + i * words; }

  template <class Visit>
  void walk(std::vector<std::uint64_t>& candidates, std::vector<std::size_t>& chosen, std::size_t limit,
            const Visit& visit) const {
    visit(chosen);
    if (limit != 0 && chosen.size() == limit) return;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t bits = candidates[w];
      while (bits) {
        std::size_t idx = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        std::vector<std::uint64_t> next(words);
        const std::uint64_t* r = row(idx);
        for (std::size_t x = 0; x < words; ++x) next[x] = candidates[x] & r[x];
        chosen.push_back(idx);
        walk(next, chosen, limit, visit);
        chosen.pop_back();
      }
    }
  }

  template <class Visit>
  void for_each_clique(std::size_t limit, const Visit& visit) const {
    std::vector<std::uint64_t> all(words, 0);
    for (std::size_t i = 0; i < ground.size(); ++i) all[i / 64] |= std::uint64_t{1} << (i % 64);
    std::vector<std::size_t> chosen;
    walk(all, chosen, limit, visit);
  }
};

}  // namespace

std::vector<std::vector<Multiset>> sorted_subsets(std::span<const Multiset> ground, std::size_t size) {
  SortGraph graph(ground);
  std::vector<std::vector<Multiset>> out;
  graph.for_each_clique(size, [&](const std::vector<std::size_t>& chosen) {
    if (chosen.empty() || (size != 0 && chosen.size() != size)) return;
    std::vector<Multiset> c;
    c.reserve(chosen.size());
    for (std::size_t i : chosen) c.push_back(graph.ground[i]);
    out.push_back(std::move(c));
  });
  std::sort(out.begin(), out.end());
  return out;
}

Int count_sorted_subsets(std::span<const Multiset> ground, std::size_t size) {
  if (size == 0) return 1;
  SortGraph graph(ground);
  Int count = 0;
  graph.for_each_clique(size, [&](const std::vector<std::size_t>& chosen) {
    if (chosen.size() == size) ++count;
  });
  return count;
}

std::vector<Int> sorted_subset_profile(std::span<const Multiset> ground) {
  SortGraph graph(ground);
  std::vector<Int> profile(1, 0);
  graph.for_each_clique(0, [&](const std::vector<std::size_t>& chosen) {
    if (chosen.empty()) return;
    if (profile.size() <= chosen.size()) profile.resize(chosen.size() + 1, 0);
    ++profile[chosen.size()];
  });
  return profile;
}

Permutation::Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
  const int m = size();
  std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
  for (int v : one_line_) {
    if (v < 1 || v > m || seen[static_cast<std::size_t>(v)])
      throw ArgumentError("not a permutation of [1.." + std::to_string(m) + "]");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> w(static_cast<std::size_t>(m));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view word) {
  std::vector<int> values;
  if (word.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= word.size()) {
      std::size_t end = word.find(',', start);
      if (end == std::string_view::npos) end = word.size();
      std::string_view piece = word.substr(start, end - start);
      if (piece.empty()) throw ArgumentError("empty entry in permutation word");
      int v = 0;
      for (char ch : piece) {
        if (ch < '0' || ch > '9') throw ArgumentError("non-digit in permutation word");
        v = v * 10 + (ch - '0');
      }
      values.push_back(v);
      start = end + 1;
    }
  } else {
    for (char ch : word) {
      if (ch < '1' || ch > '9') throw ArgumentError("non-digit in permutation word");
      values.push_back(ch - '0');
    }
  }
  return Permutation(std::move(values));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(one_line_.size());
  for (std::size_t i = 0; i < one_line_.size(); ++i) inv[static_cast<std::size_t>(one_line_[i] - 1)] = static_cast<int>(i + 1);
  return Permutation(std::move(inv));
}

std::string Permutation::word() const {
  std::string s;
  const bool compact = size() <= 9;
  for (std::size_t i = 0; i < one_line_.size(); ++i) {
    if (!compact && i) s += ',';
    s += std::to_string(one_line_[i]);
  }
  return s;
}

std::vector<Permutation> all_permutations(int m) {
  std::vector<Permutation> out;
  for_each_permutation(m, [&](const Permutation& w) { out.push_back(w); });
  return out;
}

void for_each_permutation(int m, const std::function<void(const Permutation&)>& visit) {
  if (m < 0) throw ArgumentError("negative permutation size");
  std::vector<int> w(static_cast<std::size_t>(m));
  std::iota(w.begin(), w.end(), 1);
  do {
    visit(Permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
}

int descent_count(std::span<const int> word) {
  int d = 0;
  for (std::size_t i = 0; i + 1 < word.size(); ++i)
    if (word[i] > word[i + 1]) ++d;
  return d;
}

int descent_count(const Permutation& w) { return descent_count(std::span<const int>(w.one_line())); }

int circular_descent_count(const Permutation& w) {
  int d = descent_count(w);
  if (w.size() >= 1 && w(w.size()) > w(1)) ++d;
  return d;
}

namespace {

constexpr int kEulerianMax = 20;

const std::array<std::array<Int, kEulerianMax + 1>, kEulerianMax + 1>& eulerian_table() {
  static const auto table = [] {
    std::array<std::array<Int, kEulerianMax + 1>, kEulerianMax + 1> a{};
    a[1][1] = 1;
    for (int m = 2; m <= kEulerianMax; ++m)
      for (int k = 1; k <= m; ++k)
        a[m][k] = checked_add(checked_mul(k, a[m - 1][k]), checked_mul(m - k + 1, a[m - 1][k - 1]));
    return a;
  }();
  return table;
}

}  // namespace

Int eulerian_number(int k, int m) {
  if (m < 1 || k < 1 || k > m) throw ArgumentError("eulerian_number requires 1 <= k <= m");
  if (m > kEulerianMax) throw ArgumentError("eulerian_number supports m <= " + std::to_string(kEulerianMax));
  return eulerian_table()[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)];
}

IntPolynomial eulerian_polynomial(int m) {
  if (m < 1) throw ArgumentError("eulerian_polynomial requires m >= 1");
  IntPolynomial p;
  for (int k = 1; k <= m; ++k) p.add_term(k, eulerian_number(k, m));
  return p;
}

LongCycle::LongCycle(const Permutation& any_representative) {
  std::vector<int> w = any_representative.one_line();
  if (!w.empty()) {
    auto top = std::find(w.begin(), w.end(), static_cast<int>(w.size()));
    std::rotate(w.begin(), top + 1, w.end());
  }
  canonical_ = Permutation(std::move(w));
}

LongCycle canonical_cycle(const Permutation& w) { return LongCycle(w); }

}  // namespace alcove
