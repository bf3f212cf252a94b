#include <doctest.h>

#include "slrep/semilattice.hpp"
#include "support/enumerate.hpp"

using namespace slrep;

namespace {

FiniteSemilattice three_chain() {
  return FiniteSemilattice({"0", "a", "b"}, {0, 1, 2, 1, 1, 2, 2, 2, 2});
}

FiniteSemilattice square() {
  return FiniteSemilattice({"0", "p", "q", "1"},
                           {0, 1, 2, 3, 1, 1, 3, 3, 2, 3, 2, 3, 3, 3, 3, 3});
}

FiniteSemilattice m3() {
  return FiniteSemilattice({"0", "x", "y", "z", "1"},
                           {0, 1, 2, 3, 4, 1, 1, 4, 4, 4, 2, 4, 2, 4, 4,
                            3, 4, 4, 3, 4, 4, 4, 4, 4, 4});
}

}  // namespace

TEST_CASE("join table validation names the broken axiom") {
  CHECK(!validate_join_table({0, 1, 1, 1}, 2).has_value());
  auto bad_comm = validate_join_table({0, 1, 0, 1}, 2);
  REQUIRE(bad_comm.has_value());
  CHECK(bad_comm->axiom == "commutativity");
  auto bad_idem = validate_join_table({1, 1, 1, 1}, 2);
  REQUIRE(bad_idem.has_value());
  CHECK(bad_idem->axiom == "idempotence");
  auto bad_range = validate_join_table({0, 5, 5, 1}, 2);
  REQUIRE(bad_range.has_value());
  CHECK(bad_range->axiom == "shape");
}

TEST_CASE("order, bounds and covers") {
  auto S = square();
  CHECK(S.leq(0, 3));
  CHECK(!S.leq(1, 2));
  CHECK(S.least() == 0);
  CHECK(S.greatest() == 3);
  CHECK(S.is_lattice());
  CHECK(S.meet(1, 2) == 0);
  CHECK(S.meet(1, 3) == 1);
  CHECK(S.upper_covers(0) == std::vector<int>{1, 2});
  CHECK(S.lower_covers(3) == std::vector<int>{1, 2});
}

TEST_CASE("semilattice without a least element") {
  FiniteSemilattice S({"a", "b", "t"}, {0, 2, 2, 2, 1, 2, 2, 2, 2});
  CHECK(!S.least().has_value());
  CHECK(S.greatest() == 2);
  CHECK(!S.is_lattice());
}

TEST_CASE("homomorphism predicates") {
  SemilatticeHom f{square(), three_chain(), {0, 1, 2, 2}};
  CHECK(f.is_homomorphism());
  CHECK(f.preserves_zero());
  CHECK(f.preserves_one());
  CHECK(!f.is_injective());
  CHECK(f.is_surjective());
  SemilatticeHom notf{square(), three_chain(), {0, 1, 1, 2}};
  CHECK(!notf.is_homomorphism());
}

TEST_CASE("composition and identity") {
  SemilatticeHom f{square(), three_chain(), {0, 1, 2, 2}};
  auto id = identity_hom(square());
  auto g = compose(f, id);
  CHECK(g.map == f.map);
}

TEST_CASE("kernel partition is canonical") {
  SemilatticeHom f{square(), three_chain(), {0, 1, 2, 2}};
  auto ker = kernel(f);
  CHECK(ker.block_of == std::vector<int>{0, 1, 2, 2});
  CHECK(ker.block_count == 3);
}

TEST_CASE("distributivity witness on M3") {
  auto w = distributivity_defect(m3());
  REQUIRE(w.has_value());
  // a <= b0 v b1 with incomparable atoms admits no splitting
  CHECK(w->a == 1);
  CHECK(!is_distributive(m3()));
  CHECK(is_distributive(square()));
  CHECK(is_distributive(three_chain()));
}

TEST_CASE("constraint solving returns the least solution") {
  auto S = three_chain();
  // a <= 0 v x forces x >= a; x <= b allows a and b; least is a
  auto x = solve_constraints(S, {{1, 0}}, {2});
  CHECK(x == 1);
  // unsatisfiable: b <= 0 v x and x <= 0
  CHECK(!solve_constraints(S, {{2, 0}}, {0}).has_value());
  // no lower pairs: least element of the down-set of the uppers
  CHECK(solve_constraints(S, {}, {1}) == 0);
}

TEST_CASE("quotient by the kernel embeds into the target") {
  SemilatticeHom f{square(), three_chain(), {0, 1, 2, 2}};
  auto fac = factor_hom(f);
  CHECK(fac.quotient.size() == 3);
  CHECK(fac.projection.map == std::vector<int>{0, 1, 2, 2});
  CHECK(fac.projection.is_surjective());
  CHECK(fac.embedding.is_injective());
  for (int x = 0; x < 4; ++x)
    CHECK(fac.embedding(fac.projection(x)) == f(x));
}

TEST_CASE("subsemilattice closure") {
  auto S = square();
  CHECK(subsemilattice_closure(S, {1, 2}) == std::vector<int>{1, 2, 3});
  CHECK(subsemilattice_closure(S, {0}) == std::vector<int>{0});
}

TEST_CASE("isomorphism search") {
  FiniteSemilattice relabeled({"low", "mid", "top"},
                              {0, 1, 2, 1, 1, 2, 2, 2, 2});
  auto iso = is_isomorphic(three_chain(), relabeled);
  REQUIRE(iso.has_value());
  CHECK(*iso == std::vector<int>{0, 1, 2});
  CHECK(!is_isomorphic(square(), m3()).has_value());
  CHECK(!is_isomorphic(square(), three_chain()).has_value());
}

TEST_CASE("recognizing powerset semilattices") {
  auto B = boolean_semilattice(3, {"x", "y", "z"});
  CHECK(B.size() == 8);
  CHECK(B.label(0) == "{}");
  CHECK(B.label(5) == "{x,z}");
  CHECK(B.join(1, 2) == 3);
  auto bs = boolean_structure(B);
  REQUIRE(bs.has_value());
  CHECK(bs->rank == 3);
  CHECK(bs->atoms == std::vector<int>{1, 2, 4});
  CHECK(!boolean_structure(three_chain()).has_value());
  CHECK(!boolean_structure(m3()).has_value());
}

TEST_CASE("distributivity matches the refinement property on small cases") {
  for (const auto& S : testing::all_zero_semilattices_up_to(5))
    CHECK(is_distributive(S) == testing::has_refinement_property(S));
}

TEST_CASE("small lattice enumeration counts") {
  // lattices up to isomorphism: 1, 1, 1, 2, 5 for sizes 1..5
  CHECK(testing::all_zero_semilattices(1).size() == 1);
  CHECK(testing::all_zero_semilattices(2).size() == 1);
  CHECK(testing::all_zero_semilattices(3).size() == 1);
  CHECK(testing::all_zero_semilattices(4).size() == 2);
  CHECK(testing::all_zero_semilattices(5).size() == 5);
}
