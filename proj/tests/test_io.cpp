#include <doctest.h>

#include "slrep/dot.hpp"
#include "slrep/json_io.hpp"

using namespace slrep;
using slrep::io::json;

TEST_CASE("poset round trip") {
  json doc = {{"kind", "poset"},
              {"elements", {"p", "q", "r"}},
              {"covers", json::array({{"p", "r"}, {"q", "r"}})}};
  auto P = io::poset_from_json(doc);
  CHECK(P.leq(0, 2));
  auto emitted = io::poset_to_json(P);
  CHECK(io::poset_to_json(io::poset_from_json(emitted)) == emitted);
}

TEST_CASE("poset accepts a full relation and label references") {
  json doc = {{"kind", "poset"},
              {"elements", {"a", "b", "c"}},
              {"leq", {{0, 1}, {"b", "c"}}}};
  auto P = io::poset_from_json(doc);
  CHECK(P.leq(0, 2));
}

TEST_CASE("semilattice schema errors name the axiom") {
  json doc = {{"kind", "semilattice"},
              {"elements", {"x", "y"}},
              {"join", {{0, 1}, {0, 1}}}};
  CHECK_THROWS_WITH_AS(io::semilattice_from_json(doc),
                       doctest::Contains("commutativity"), io::SchemaError);
  doc["join"] = {{0, 1}};
  CHECK_THROWS_AS(io::semilattice_from_json(doc), io::SchemaError);
}

TEST_CASE("monoid round trip keeps the zero") {
  json doc = {{"kind", "monoid"},
              {"elements", {"0", "1", "big"}},
              {"add", {{0, 1, 2}, {1, 2, 2}, {2, 2, 2}}},
              {"zero", "0"}};
  auto M = io::monoid_from_json(doc);
  CHECK(M.zero() == 0);
  auto emitted = io::monoid_to_json(M);
  CHECK(io::monoid_to_json(io::monoid_from_json(emitted)) == emitted);
}

TEST_CASE("hom documents are validated") {
  json S = {{"kind", "semilattice"},
            {"elements", {"0", "a"}},
            {"join", {{0, 1}, {1, 1}}}};
  json doc = {{"kind", "hom"}, {"source", S}, {"target", S}, {"map", {0, 1}}};
  auto f = io::hom_from_json(doc);
  CHECK(f.is_homomorphism());
  doc["map"] = {1, 0};
  CHECK_THROWS_AS(io::hom_from_json(doc), io::SchemaError);
}

TEST_CASE("tower round trip and shape validation") {
  json doc = {{"kind", "tower"},
              {"levels", {{{"sizes", {1, 1}}}, {{"sizes", {2, 1}}}}},
              {"maps", {{{1, 0}, {1, 1}}}},
              {"unital", true}};
  auto tower = io::bratteli_from_json(doc);
  CHECK(tower.levels.size() == 2);
  auto emitted = io::bratteli_to_json(tower);
  CHECK(io::bratteli_to_json(io::bratteli_from_json(emitted)) == emitted);
  doc["levels"][1]["sizes"] = {1, 1};
  CHECK_THROWS_AS(io::bratteli_from_json(doc), io::SchemaError);
}

TEST_CASE("rational vectors accept integers and fraction strings") {
  json doc = {{"kind", "rational_vector"}, {"entries", {1, "2/4", "0"}}};
  auto v = io::rational_vector_from_json(doc);
  CHECK(rational_to_string(v.entries[1]) == "1/2");
  auto emitted = io::rational_vector_to_json(v);
  CHECK(emitted["entries"] == json({"1", "1/2", "0"}));
}

TEST_CASE("set lattice closure failures surface as schema errors") {
  json doc = {{"kind", "set_lattice"},
              {"ground", {"x", "y"}},
              {"sets", {json::array(), {"x"}, {"y"}}}};
  CHECK_THROWS_AS(io::set_lattice_from_json(doc), io::SchemaError);
  doc["sets"].push_back({"x", "y"});
  auto D = io::set_lattice_from_json(doc);
  CHECK(D.members().size() == 4);
}

TEST_CASE("load_document dispatches on kind and is idempotent") {
  json doc = {{"kind", "semilattice"},
              {"elements", {"0", "a"}},
              {"join", {{0, 1}, {1, 1}}}};
  auto canonical = io::load_document(doc);
  CHECK(io::load_document(canonical) == canonical);
  CHECK_THROWS_AS(io::load_document(json{{"kind", "nope"}}), io::SchemaError);
}

TEST_CASE("DOT output is structurally sound") {
  FinitePoset P({"p", "q"}, {{0, 1}});
  auto dot = poset_dot(P);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("n0 -> n1") != std::string::npos);
  CHECK(dot.rfind("}\n") == dot.size() - 2);

  BratteliTower tower;
  tower.levels = {MatricialShape{{1}}, MatricialShape{{4}}};
  tower.maps = {MultiplicityMatrix{{{4}}}};
  auto bdot = bratteli_dot(tower);
  CHECK(bdot.find("label=\"4\"") != std::string::npos);
}
