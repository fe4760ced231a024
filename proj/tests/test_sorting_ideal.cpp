#include <doctest.h>

#include <set>

#include "alcove/errors.hpp"
#include "alcove/sorting_ideal.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace alcove;

namespace {

Multiset S(std::vector<int> e, int n) { return make_subset(std::move(e), n); }

Monomial dealt_by_oracle(const Monomial& m) {
  std::vector<oracle::Word> factors;
  for (const auto& f : m.factors()) factors.push_back(f.elements());
  std::vector<Multiset> out;
  for (const auto& w : oracle::deal(factors)) out.emplace_back(w, m.n());
  return Monomial(out);
}

}  // namespace

TEST_SUITE("sorting-ideal") {
  TEST_CASE("normal form examples") {
    const auto ground = all_subsets(6, 4);
    Monomial m({S({1, 2, 3, 5}, 6), S({2, 4, 5, 6}, 6)});
    CHECK(normal_form(m, ground).to_string() == "x1245*x2356");
    Monomial sorted({S({1, 2, 4, 5}, 6), S({2, 3, 5, 6}, 6)});
    CHECK(normal_form(sorted, ground) == sorted);

    Monomial three({S({1, 2}, 4), S({3, 4}, 4), S({1, 3}, 4)});
    const auto nf = normal_form(three, all_subsets(4, 2));
    CHECK(nf == dealt_by_oracle(three));
    CHECK(nf.to_string() == "x13*x13*x24");
  }

  TEST_CASE("standard monomials") {
    const auto g = all_subsets(4, 2);
    CHECK(is_standard(Monomial({S({1, 3}, 4), S({2, 4}, 4)}), g));
    CHECK_FALSE(is_standard(Monomial({S({1, 2}, 4), S({3, 4}, 4)}), g));
    CHECK(is_standard(Monomial({S({1, 2}, 4)}), g));
  }

  TEST_CASE("Groebner generators") {
    std::vector<std::string> got;
    for (const auto& b : groebner_generators(all_subsets(4, 2))) got.push_back(b.to_string());
    std::sort(got.begin(), got.end());
    CHECK(got == std::vector<std::string>{"x12*x34 - x13*x24", "x14*x23 - x13*x24"});
    CHECK(groebner_generators(all_subsets(3, 1)).empty());
    std::vector<Multiset> five;
    for (const auto& s : all_subsets(4, 2))
      if (s != S({1, 2}, 4)) five.push_back(s);
    auto g5 = groebner_generators(five);
    REQUIRE(g5.size() == 1);
    CHECK(g5[0].to_string() == "x14*x23 - x13*x24");
    std::vector<Multiset> not_closed{S({1, 2}, 4), S({3, 4}, 4)};
    CHECK_THROWS_AS(groebner_generators(not_closed), NotSortClosedError);
  }

  TEST_CASE("toric fibers") {
    CHECK(same_toric_fiber(Monomial({S({1, 2}, 4), S({3, 4}, 4)}), Monomial({S({1, 3}, 4), S({2, 4}, 4)})));
    CHECK_FALSE(same_toric_fiber(Monomial({S({1, 2}, 4), S({1, 3}, 4)}), Monomial({S({1, 2}, 4), S({1, 4}, 4)})));
    CHECK_THROWS_AS(same_toric_fiber(Monomial({S({1, 2}, 4)}), Monomial({S({1, 2}, 4), S({1, 3}, 4)})),
                    ArgumentError);
  }

  TEST_CASE("reduction order does not matter") {
    gen::Rng rng(41);
    for (int t = 0; t < 1000; ++t) {
      const int n = 6;
      const int k = rng() % 2 == 0 ? 2 : 3;
      const auto all = all_subsets(n, k);
      const std::set<Multiset> ground(all.begin(), all.end());
      std::vector<Multiset> factors;
      const auto deg = gen::uniform(rng, 1, 4);
      for (int d = 0; d < deg; ++d) factors.push_back(all[rng() % all.size()]);
      const Monomial m(factors);
      const auto first = reduce_to_normal_form(m, ground);
      const auto random = reduce_to_normal_form(m, ground, [&](std::size_t c) { return rng() % c; });
      CHECK(first.result == random.result);
      CHECK(first.result == dealt_by_oracle(m));
      CHECK(is_standard(first.result, all));
      CHECK(same_toric_fiber(m, first.result));
      const std::size_t bound = static_cast<std::size_t>(deg * (deg - 1) / 2 * k * n);
      CHECK(first.steps <= bound);
      CHECK(random.steps <= bound);
      if (is_standard(m, all)) CHECK(first.result == m);
    }
  }

  TEST_CASE("leaving the ground collection is reported") {
    std::set<Multiset> ground{S({1, 2}, 4), S({3, 4}, 4)};
    CHECK_THROWS_AS(reduce_to_normal_form(Monomial({S({1, 2}, 4), S({3, 4}, 4)}), ground), NotSortClosedError);
  }

  TEST_CASE("standard square-free monomials of top degree count the cells") {
    for (int n = 3; n <= 5; ++n)
      for (int k = 1; k < n; ++k) {
        const auto all = all_subsets(n, k);
        Int standard = 0;
        // Every n-element choice of distinct factors.
        std::vector<bool> pick(all.size(), false);
        std::fill(pick.begin(), pick.begin() + n, true);
        do {
          std::vector<Multiset> f;
          for (std::size_t i = 0; i < all.size(); ++i)
            if (pick[i]) f.push_back(all[i]);
          standard += is_standard(Monomial(f), all);
        } while (std::prev_permutation(pick.begin(), pick.end()));
        CHECK(standard == oracle::eulerian(k, n - 1));
      }
  }
}
