#include <doctest.h>

#include "slrep/order.hpp"
#include "support/enumerate.hpp"

using namespace slrep;

TEST_CASE("chain poset basics") {
  auto P = chain_poset(3);
  CHECK(P.size() == 3);
  CHECK(P.leq(0, 2));
  CHECK(!P.leq(2, 0));
  CHECK(P.down_mask(1) == 0b011);
  CHECK(P.covers() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("antichain poset has no comparabilities") {
  auto P = antichain_poset(3);
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 3; ++q) CHECK(P.leq(p, q) == (p == q));
  CHECK(P.covers().empty());
}

TEST_CASE("full relation input is transitively closed") {
  FinitePoset P({"a", "b", "c"}, {{0, 1}, {1, 2}}, RelationInput::full);
  CHECK(P.leq(0, 2));
}

TEST_CASE("antisymmetry violation is rejected") {
  CHECK_THROWS_AS(FinitePoset({"a", "b"}, {{0, 1}, {1, 0}}, RelationInput::full),
                  std::invalid_argument);
}

TEST_CASE("lower sets of the V poset") {
  // p, q below r: lower sets are {}, {p}, {q}, {p,q}, {p,q,r}
  FinitePoset P({"p", "q", "r"}, {{0, 2}, {1, 2}});
  auto H = lower_sets(P);
  CHECK(H.lattice.size() == 5);
  CHECK(H.sets == std::vector<Mask>{0b000, 0b001, 0b010, 0b011, 0b111});
  CHECK(H.index_of(0b011) == 3);
  CHECK(H.index_of(0b101) == -1);
  CHECK(H.lattice.join(1, 2) == 3);
  CHECK(is_distributive(H.lattice));
}

TEST_CASE("lower and upper closure operations") {
  auto P = chain_poset(4);
  CHECK(P.is_lower_set(0b0011));
  CHECK(!P.is_lower_set(0b0100));
  CHECK(P.lower_closure(0b0100) == 0b0111);
}

TEST_CASE("Birkhoff dual of the square is a 2-antichain") {
  auto B = boolean_semilattice(2, {"p", "q"});
  auto res = birkhoff(B);
  REQUIRE(res.has_value());
  CHECK(res->poset.size() == 2);
  CHECK(res->poset.covers().empty());
  CHECK(res->join_irreducibles == std::vector<int>{1, 2});
  // the iso H(P) -> B must be a join-preserving bijection
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      int j = res->dual.lattice.join(x, y);
      CHECK(B.join(res->iso[x], res->iso[y]) == res->iso[j]);
    }
}

TEST_CASE("Birkhoff dual of a 3-chain is a 2-chain") {
  FiniteSemilattice S({"0", "a", "b"}, {0, 1, 2, 1, 1, 2, 2, 2, 2});
  auto res = birkhoff(S);
  REQUIRE(res.has_value());
  CHECK(res->poset.size() == 2);
  CHECK(res->poset.covers() == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(res->join_irreducibles == std::vector<int>{1, 2});
}

TEST_CASE("Birkhoff reports a defect on non-lattices") {
  // two incomparable atoms with a common top but no bottom
  FiniteSemilattice S({"a", "b", "t"}, {0, 2, 2, 2, 1, 2, 2, 2, 2});
  CHECK(!S.is_lattice());
  BirkhoffDefect defect;
  CHECK(!birkhoff(S, &defect).has_value());
  CHECK(defect.reason == "not-a-lattice");
}

TEST_CASE("Birkhoff reports a defect on non-distributive lattices") {
  // M3: three incomparable atoms
  FiniteSemilattice M3({"0", "x", "y", "z", "1"},
                       {0, 1, 2, 3, 4, 1, 1, 4, 4, 4, 2, 4, 2, 4, 4,
                        3, 4, 4, 3, 4, 4, 4, 4, 4, 4});
  BirkhoffDefect defect;
  CHECK(!birkhoff(M3, &defect).has_value());
  CHECK(defect.reason == "not-distributive");
}

TEST_CASE("meet irreducibles") {
  auto B = boolean_semilattice(2);
  CHECK(meet_irreducibles(B) == std::vector<int>{1, 2});
  FiniteSemilattice S({"0", "a", "b"}, {0, 1, 2, 1, 1, 2, 2, 2, 2});
  CHECK(meet_irreducibles(S) == std::vector<int>{0, 1});
}

TEST_CASE("duality round trip over all small distributive lattices") {
  for (const auto& L : testing::all_zero_semilattices_up_to(5)) {
    if (!is_distributive(L)) continue;
    auto res = birkhoff(L);
    REQUIRE(res.has_value());
    CHECK(res->dual.lattice.size() == L.size());
    // iso is a bijection
    std::vector<bool> hit(L.size(), false);
    for (int x : res->iso) hit[x] = true;
    for (bool h : hit) CHECK(h);
    // and order preserving both ways
    for (int x = 0; x < L.size(); ++x)
      for (int y = 0; y < L.size(); ++y)
        CHECK(res->dual.lattice.leq(x, y) == L.leq(res->iso[x], res->iso[y]));
  }
}
