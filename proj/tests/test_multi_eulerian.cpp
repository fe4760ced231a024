#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "alcove/errors.hpp"
#include "alcove/multi_eulerian.hpp"
#include "oracles.hpp"

using namespace alcove;

namespace {

IntPolynomial poly(std::vector<Int> c) { return IntPolynomial::from_coefficients(c); }

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

void for_each_weighting(const std::vector<int>& parts, const std::function<void(const WeightedSetPartition&)>& visit) {
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
}

std::vector<int> ones(int n) { return std::vector<int>(static_cast<std::size_t>(n), 1); }

constexpr MultiEulerianMethod kMethods[] = {MultiEulerianMethod::descent_word, MultiEulerianMethod::sorted_subsets,
                                            MultiEulerianMethod::alcoved_volume};

}  // namespace

TEST_SUITE("multi_eulerian") {
  TEST_CASE("small partitions") {
    for (auto method : kMethods) {
      CHECK(multi_eulerian_polynomial(WeightedSetPartition::unweighted({2, 1, 1}), method) == poly({0, 1, 2}));
      for (int n = 2; n <= 6; ++n) {
        CHECK(multi_eulerian_polynomial(WeightedSetPartition::unweighted(ones(n)), method) == eulerian_polynomial(n - 1));
        CHECK(multi_eulerian_polynomial(WeightedSetPartition::unweighted({n}), method) == poly({0, 1}));
      }
    }
    CHECK_THROWS_AS(multi_eulerian_polynomial(WeightedSetPartition::unweighted({1}), MultiEulerianMethod::sorted_subsets),
                    ArgumentError);
    CHECK_THROWS_AS(
        multi_eulerian_polynomial(WeightedSetPartition({2, 1}, {1, 0}, {1, 1}), MultiEulerianMethod::descent_word),
        MethodDomainError);
  }

  TEST_CASE("methods agree on unweighted partitions") {
    for (int n = 2; n <= 7; ++n)
      for_each_composition(n, [&](const std::vector<int>& parts) {
        const auto p = WeightedSetPartition::unweighted(parts);
        const auto a = multi_eulerian_polynomial(p, MultiEulerianMethod::descent_word);
        CHECK(a == multi_eulerian_polynomial(p, MultiEulerianMethod::sorted_subsets));
        if (n <= 6) CHECK(a == multi_eulerian_polynomial(p, MultiEulerianMethod::alcoved_volume));
        auto reversed = parts;
        std::reverse(reversed.begin(), reversed.end());
        CHECK(a == multi_eulerian_polynomial(WeightedSetPartition::unweighted(reversed),
                                             MultiEulerianMethod::descent_word));
      });
  }

  TEST_CASE("coefficients do not depend on the order of parts") {
    for (int n = 2; n <= 7; ++n)
      for_each_composition(n, [&](const std::vector<int>& parts) {
        auto sorted = parts;
        std::sort(sorted.begin(), sorted.end());
        CHECK(multi_eulerian_polynomial(WeightedSetPartition::unweighted(parts), MultiEulerianMethod::descent_word) ==
              multi_eulerian_polynomial(WeightedSetPartition::unweighted(sorted), MultiEulerianMethod::descent_word));
      });
  }

  TEST_CASE("weighted partitions: sorted subsets against the alcoved volume") {
    for (int n = 2; n <= 4; ++n)
      for_each_composition(n, [&](const std::vector<int>& parts) {
        for_each_weighting(parts, [&](const WeightedSetPartition& p) {
          CHECK(multi_eulerian_polynomial(p, MultiEulerianMethod::sorted_subsets) ==
                multi_eulerian_polynomial(p, MultiEulerianMethod::alcoved_volume));
        });
      });
  }

  TEST_CASE("value at one of starred partitions") {
    CHECK(starred(WeightedSetPartition::unweighted({2, 1})) == WeightedSetPartition::unweighted({2, 1, 1}));
    const auto w21 = weighted_at_one(WeightedSetPartition::unweighted({2, 1}));
    CHECK(w21.enumerated == 3);
    CHECK(w21.closed_form == 3);
    const auto w11 = weighted_at_one(WeightedSetPartition::unweighted({1, 1}));
    CHECK(w11.enumerated == 2);
    CHECK(w11.closed_form == 2);
    const auto w31 = weighted_at_one(WeightedSetPartition::unweighted({3, 1}));
    CHECK(w31.enumerated == 4);
    CHECK(w31.closed_form == 4);
    for (int n = 1; n <= 4; ++n)
      for_each_composition(n, [&](const std::vector<int>& parts) {
        for_each_weighting(parts, [&](const WeightedSetPartition& p) {
          const auto r = weighted_at_one(p);
          CHECK(r.enumerated == r.closed_form);
        });
      });
  }

  TEST_CASE("derivative identity") {
    const auto [lhs, rhs] = derivative_identity_sides(3);
    CHECK(lhs == poly({0, 1, 8, 3}));
    CHECK(rhs == poly({0, 1, 8, 3}));
    for (int m = 1; m <= 7; ++m) {
      CHECK(derivative_identity(m));
      IntPolynomial brute;
      oracle::for_each_word(m, [&](const oracle::Word& w) { brute.add_term(oracle::descents(w) + 1, w[0]); });
      CHECK(derivative_identity_sides(m).first == brute);
    }
    CHECK_THROWS_AS(derivative_identity_sides(0), ArgumentError);
  }

  TEST_CASE("anchored partitions") {
    for (int s = 1; s <= 5; ++s) {
      std::vector<int> parts{2};
      parts.insert(parts.end(), static_cast<std::size_t>(s), 1);
      const auto got = multi_eulerian_polynomial(WeightedSetPartition::unweighted(parts), MultiEulerianMethod::descent_word);
      CHECK(got == eulerian_polynomial(s).derivative().shifted(1));
    }
  }

  TEST_CASE("hook formula") {
    CHECK(hook_formula(2, 4) == poly({0, 1, 2}));
    CHECK(hook_formula(3, 3).is_zero());
    for (int n = 2; n <= 7; ++n)
      for (int a = 1; a <= std::min(3, n - 1); ++a) {
        std::vector<int> parts{a};
        parts.insert(parts.end(), static_cast<std::size_t>(n - a), 1);
        CHECK(hook_formula(a, n) ==
              multi_eulerian_polynomial(WeightedSetPartition::unweighted(parts), MultiEulerianMethod::descent_word));
      }
    CHECK_THROWS_AS(hook_formula(0, 3), ArgumentError);
  }

  TEST_CASE("marked descent bijection") {
    CHECK(marked_descent_bijection({Permutation::parse("53162748"), 4}) == Permutation::parse("351728649"));
    CHECK(marked_descent_bijection({Permutation::parse("213"), 1}) == Permutation::parse("2314"));
    CHECK(marked_descent_inverse(Permutation::parse("351728649")) == MarkedPermutation(Permutation::parse("53162748"), 4));
    CHECK(circular_descent_count(Permutation::parse("53162748")) == 5);
    CHECK(circular_descent_count(Permutation::parse("351728649")) == 5);
    CHECK_THROWS_AS(MarkedPermutation(Permutation::parse("213"), 2), ArgumentError);
    CHECK_THROWS_AS(MarkedPermutation(Permutation::parse("231"), 2), ArgumentError);
    CHECK_THROWS_AS(MarkedPermutation(Permutation::parse("1"), 1), ArgumentError);
    CHECK_THROWS_AS(marked_descent_inverse(Permutation::parse("2134")), ArgumentError);
  }

  TEST_CASE("marked descent bijection is a cdes-preserving bijection") {
    for (int m = 2; m <= 6; ++m) {
      std::set<Permutation> images;
      std::map<int, Int> source_by_cdes;
      for_each_permutation(m, [&](const Permutation& u) {
        if (u(m) != m) return;
        for (int i = 1; i <= m; ++i) {
          const int next = i == m ? u(1) : u(i + 1);
          if (u(i) < next) continue;
          const MarkedPermutation marked(u, i);
          const auto w = marked_descent_bijection(marked);
          CHECK(w(m + 1) == m + 1);
          CHECK(w(1) < w(2));
          CHECK(circular_descent_count(w) == circular_descent_count(u));
          CHECK(marked_descent_inverse(w) == marked);
          CHECK(images.insert(w).second);
          ++source_by_cdes[circular_descent_count(u)];
        }
      });
      std::map<int, Int> target_by_cdes;
      for_each_permutation(m + 1, [&](const Permutation& w) {
        if (w(m + 1) == m + 1 && w(1) < w(2)) {
          CHECK(images.count(w) == 1);
          ++target_by_cdes[circular_descent_count(w)];
        }
      });
      CHECK(source_by_cdes == target_by_cdes);
    }
  }
}
