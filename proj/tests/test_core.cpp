#include <doctest.h>

#include "alcove/core.hpp"
#include "alcove/errors.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace alcove;

namespace {

Multiset S(std::vector<int> e, int n) { return make_subset(std::move(e), n); }

std::vector<int> rotate_values(const std::vector<int>& w) {
  const int m = static_cast<int>(w.size());
  std::vector<int> out;
  for (int x : w) out.push_back(x % m + 1);
  return out;
}

}  // namespace

TEST_SUITE("core") {
  TEST_CASE("sort_pair examples") {
    auto [U, V] = sort_pair(S({1, 2, 3, 5}, 6), S({2, 4, 5, 6}, 6));
    CHECK(U == S({1, 2, 4, 5}, 6));
    CHECK(V == S({2, 3, 5, 6}, 6));

    auto I = S({2, 3, 5}, 6);
    CHECK(sort_pair(I, I) == std::pair{I, I});

    auto [U2, V2] = sort_pair(S({1, 4}, 4), S({2, 3}, 4));
    CHECK(U2 == S({1, 3}, 4));
    CHECK(V2 == S({2, 4}, 4));

    CHECK_THROWS_AS(sort_pair(S({1, 2}, 4), S({1, 2, 3}, 4)), ArgumentError);
  }

  TEST_CASE("is_sorted_pair examples") {
    CHECK(is_sorted_pair(S({1, 3}, 4), S({2, 4}, 4)));
    CHECK_FALSE(is_sorted_pair(S({1, 2}, 4), S({3, 4}, 4)));
    CHECK(is_sorted_pair(S({1, 2}, 4), S({2, 3}, 4)));
    CHECK_THROWS_AS(is_sorted_pair(S({1}, 4), S({2, 3}, 4)), ArgumentError);
  }

  TEST_CASE("is_sorted_chain examples") {
    std::vector<Multiset> chain{S({1, 2}, 4), S({1, 3}, 4), S({2, 3}, 4), S({2, 4}, 4)};
    CHECK(is_sorted_chain(chain));
    std::vector<Multiset> bad{S({1, 2}, 4), S({3, 4}, 4)};
    CHECK_FALSE(is_sorted_chain(bad));
    std::vector<Multiset> one{S({2, 3}, 4)};
    CHECK(is_sorted_chain(one));
    // Adjacent pairs sorted, but {12} and {34} are not.
    std::vector<Multiset> gap{S({1, 2}, 4), S({2, 3}, 4), S({3, 4}, 4)};
    CHECK_FALSE(is_sorted_chain(gap));
  }

  TEST_CASE("sort_pair agrees with the split-search oracle") {
    gen::Rng rng(11);
    for (int t = 0; t < 500; ++t) {
      const int n = static_cast<int>(gen::uniform(rng, 2, 8));
      const int k = static_cast<int>(gen::uniform(rng, 1, 4));
      Multiset I = gen::multiset(rng, n, k), J = gen::multiset(rng, n, k);
      auto [U, V] = sort_pair(I, J);
      auto [u, v] = oracle::sort_pair(I.elements(), J.elements());
      REQUIRE(U.elements() == u);
      REQUIRE(V.elements() == v);
      // Idempotent and union preserving.
      CHECK(sort_pair(U, V) == std::pair{U, V});
      std::vector<int> a = I.elements(), b = U.elements();
      a.insert(a.end(), J.elements().begin(), J.elements().end());
      b.insert(b.end(), V.elements().begin(), V.elements().end());
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      CHECK(a == b);
    }
  }

  TEST_CASE("is_sorted_chain matches the pairwise definition") {
    gen::Rng rng(12);
    for (int t = 0; t < 500; ++t) {
      const int n = static_cast<int>(gen::uniform(rng, 2, 6));
      const int k = static_cast<int>(gen::uniform(rng, 1, n - 1));
      std::vector<Multiset> c;
      const auto len = gen::uniform(rng, 1, 4);
      for (int i = 0; i < len; ++i) c.push_back(gen::subset(rng, n, k));
      std::sort(c.begin(), c.end());
      bool pairwise = true;
      for (std::size_t a = 0; a < c.size(); ++a)
        for (std::size_t b = a + 1; b < c.size(); ++b)
          pairwise = pairwise && oracle::interleaved(c[a].elements(), c[b].elements());
      CHECK(is_sorted_chain(c) == pairwise);
    }
  }

  TEST_CASE("descent statistics") {
    CHECK(descent_count(Permutation::identity(5)) == 0);
    CHECK(descent_count(Permutation::parse("132")) == 1);
    CHECK(descent_count(Permutation::parse("53162748")) == 4);
    CHECK(circular_descent_count(Permutation::parse("53162748")) == 5);
    CHECK(circular_descent_count(Permutation::identity(6)) == 1);
    CHECK(circular_descent_count(Permutation::parse("321")) == 2);
  }

  TEST_CASE("circular descents are constant on double cosets of S_6") {
    for_each_permutation(6, [](const Permutation& w) {
      const int c = circular_descent_count(w);
      std::vector<int> rotated = w.one_line();
      std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
      CHECK(circular_descent_count(Permutation(rotated)) == c);
      CHECK(circular_descent_count(Permutation(rotate_values(w.one_line()))) == c);
    });
  }

  TEST_CASE("Eulerian numbers") {
    CHECK(eulerian_number(1, 7) == 1);
    CHECK(eulerian_number(2, 3) == 4);
    CHECK(eulerian_number(2, 4) == 11);
    CHECK_THROWS_AS(eulerian_number(0, 3), ArgumentError);
    CHECK_THROWS_AS(eulerian_number(4, 3), ArgumentError);
    CHECK(eulerian_polynomial(1).to_string() == "t");
    CHECK(eulerian_polynomial(3).to_string() == "t + 4t^2 + t^3");
    CHECK(eulerian_polynomial(4).to_string() == "t + 11t^2 + 11t^3 + t^4");
    CHECK_THROWS_AS(eulerian_polynomial(0), ArgumentError);
    for (int m = 1; m <= 8; ++m) {
      const auto brute = oracle::eulerian_coefficients(m);
      Int total = 0;
      for (int k = 1; k <= m; ++k) {
        CHECK(eulerian_number(k, m) == brute[static_cast<std::size_t>(k)]);
        total += eulerian_number(k, m);
      }
      CHECK(total == factorial(m));
    }
  }

  TEST_CASE("long cycles") {
    CHECK(canonical_cycle(Permutation::parse("2134")).word() == "2134");
    CHECK(canonical_cycle(Permutation::parse("4213")).word() == "2134");
    CHECK(canonical_cycle(Permutation::parse("312456")).word() == "312456");
  }

  TEST_CASE("permutations and multisets") {
    CHECK(Permutation::parse("2,1,3").word() == "213");
    CHECK(Permutation::parse("10,1,2,3,4,5,6,7,8,9").word() == "10,1,2,3,4,5,6,7,8,9");
    CHECK(Permutation::parse("3124").inverse() == Permutation::parse("2314"));
    CHECK_THROWS_AS(Permutation::parse("1134"), ArgumentError);
    CHECK(all_permutations(4).size() == 24);
    CHECK(Multiset::from_counts(std::vector<Int>{2, 0, 1}).to_string() == "{1,1,3}");
    CHECK(S({1, 2, 4}, 5).label() == "124");
    CHECK_THROWS_AS(S({2, 1}, 3), ArgumentError);
    CHECK(all_subsets(5, 2).size() == 10);
  }

  TEST_CASE("integer helpers") {
    CHECK(binomial(6, 2) == 15);
    CHECK(binomial(3, 5) == 0);
    CHECK(multinomial(std::vector<int>{3, 1}) == 4);
    CHECK_THROWS(checked_mul(Int{1} << 62, 4));
  }

  TEST_CASE("polynomial arithmetic") {
    auto p = IntPolynomial::from_coefficients({1, 2, 1});
    CHECK(p.to_string() == "1 + 2t + t^2");
    CHECK((p * p).evaluate(1) == 16);
    CHECK(p.derivative().to_string() == "2 + 2t");
    CHECK((p - p).is_zero());
    CHECK((p - p).to_string() == "0");
    CHECK(IntPolynomial::from_coefficients({0, -1}).to_string() == "-t");
  }
}
