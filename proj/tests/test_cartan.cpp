#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qaff/cartan.hpp"

using namespace qaff;

TEST_CASE("dual Coxeter numbers and index sets") {
  CartanData b3 = build_cartan({Series::B, 3});
  CHECK(b3.dual_coxeter == 5);
  CHECK(b3.N == 7);

  CartanData b2 = build_cartan({Series::B, 2});
  CHECK(b2.N == 5);
  CHECK(b2.index_set == std::vector<int>{1, 2, 0, -2, -1});

  CartanData d4 = build_cartan({Series::D, 4});
  CHECK(d4.dual_coxeter == 6);
  CHECK(d4.N == 8);
  // 2 rho_bar = 6 eps_1 + 4 eps_2 + 2 eps_3
  CHECK(d4.rho_bar.eps == std::vector<Rat>{3, 2, 1, 0});
}

TEST_CASE("rank constraints") {
  CHECK_THROWS_AS(build_cartan({Series::B, 1}), Error);
  CHECK_THROWS_AS(build_cartan({Series::D, 2}), Error);
  CHECK_NOTHROW(build_cartan({Series::D, 3}));  // D_3 ~ A_3, permitted
}

TEST_CASE("pairings from epsilon data") {
  CartanData b3 = build_cartan({Series::B, 3});
  CHECK(b3.pairing(1, 1) == 2);
  CHECK(b3.pairing(3, 3) == 1);
  CHECK(b3.pairing(0, 1) == 0);
  CHECK(b3.pairing(0, 2) == -1);
  CHECK(b3.pairing(0, 0) == 2);
  CHECK_THROWS_AS(b3.pairing(0, 4), Error);

  CartanData d4 = build_cartan({Series::D, 4});
  CHECK(d4.pairing(4, 4) == 2);
  CHECK(d4.pairing(3, 4) == 0);   // fork nodes
  CHECK(d4.pairing(2, 4) == -1);
}

TEST_CASE("bar map") {
  CartanData b2 = build_cartan({Series::B, 2});
  CHECK(b2.bar(0) == 2);
  CHECK(b2.bar(-1) == 4);
  CHECK(b2.bar(1) == 1);
  CHECK_THROWS_AS(b2.bar(3), Error);

  for (Series s : {Series::B, Series::D}) {
    for (int n = 3; n <= 6; ++n) {
      CartanData d = build_cartan({s, n});
      for (int j : d.index_set) {
        if (j != 0) CHECK(d.bar(j) + d.bar(-j) == d.N);
      }
      // injective away from the single collision at value n:
      // bar(0) = bar(n) for B, bar(-n) = bar(n) for D
      for (int i : d.index_set)
        for (int j : d.index_set) {
          if (i == j || d.bar(i) != d.bar(j)) continue;
          CHECK(d.bar(i) == n);
          CHECK(std::min(i, j) == (s == Series::B ? 0 : -n));
          CHECK(std::max(i, j) == n);
        }
    }
  }
}

TEST_CASE("linear order") {
  CartanData d4 = build_cartan({Series::D, 4});
  CHECK(d4.precede(4, -4));
  CHECK(!d4.precede(1, 1));
  CHECK_THROWS_AS(d4.precede(0, 1), Error);  // 0 absent for D

  CartanData b2 = build_cartan({Series::B, 2});
  CHECK(b2.precede(0, -2));
  CHECK(b2.precede(2, 0));
  // totality
  for (int i : b2.index_set)
    for (int j : b2.index_set)
      if (i != j) CHECK(b2.precede(i, j) != b2.precede(j, i));
}

TEST_CASE("comarks sum to the dual Coxeter number, ranks 2..6") {
  for (Series s : {Series::B, Series::D}) {
    for (int n = (s == Series::B ? 2 : 3); n <= 6; ++n) {
      CartanData d = build_cartan({s, n});
      Rat sum = 0;
      for (const Rat& c : d.comarks) sum += c;
      CHECK(sum == d.dual_coxeter);
    }
  }
}

TEST_CASE("generalized Cartan matrix shape") {
  for (Series s : {Series::B, Series::D}) {
    for (int n = (s == Series::B ? 2 : 3); n <= 5; ++n) {
      CartanData d = build_cartan({s, n});
      for (int i = 0; i <= n; ++i) {
        CHECK(d.cartan_integer(i, i) == 2);
        for (int j = 0; j <= n; ++j) {
          if (i == j) continue;
          int cij = d.cartan_integer(i, j);
          CHECK(cij <= 0);
          CHECK((cij == 0) == (d.cartan_integer(j, i) == 0));
        }
      }
    }
  }
}
