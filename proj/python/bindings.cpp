// Python bindings for the core operations.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "slrep/bergman.hpp"
#include "slrep/boolean_resolution.hpp"
#include "slrep/dot.hpp"
#include "slrep/json_io.hpp"
#include "slrep/monoid.hpp"
#include "slrep/order.hpp"
#include "slrep/semilattice.hpp"
#include "slrep/temperate.hpp"

namespace py = pybind11;
using namespace slrep;

using slrep::io::json;

namespace {

json parse_doc(const std::string& text) { return json::parse(text); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "finite representations of distributive semilattices";

  py::class_<FinitePoset>(m, "FinitePoset")
      .def(py::init([](std::vector<std::string> labels,
                       std::vector<std::pair<int, int>> covers) {
             return FinitePoset(std::move(labels), covers);
           }),
           py::arg("labels"), py::arg("covers"))
      .def_property_readonly("size", &FinitePoset::size)
      .def("label", &FinitePoset::label)
      .def("leq", &FinitePoset::leq)
      .def("covers", &FinitePoset::covers)
      .def("down_mask", &FinitePoset::down_mask);

  py::class_<FiniteSemilattice>(m, "FiniteSemilattice")
      .def(py::init<std::vector<std::string>, std::vector<int>>(),
           py::arg("labels"), py::arg("table"))
      .def_property_readonly("size", &FiniteSemilattice::size)
      .def("label", &FiniteSemilattice::label)
      .def_property_readonly("labels", &FiniteSemilattice::labels)
      .def("join", &FiniteSemilattice::join)
      .def("leq", &FiniteSemilattice::leq)
      .def("least", [](const FiniteSemilattice& S) { return S.least(); })
      .def("greatest", [](const FiniteSemilattice& S) { return S.greatest(); })
      .def("is_lattice", &FiniteSemilattice::is_lattice)
      .def("meet", &FiniteSemilattice::meet);

  py::class_<SemilatticeHom>(m, "SemilatticeHom")
      .def(py::init([](FiniteSemilattice source, FiniteSemilattice target,
                       std::vector<int> map) {
             SemilatticeHom f{std::move(source), std::move(target),
                              std::move(map)};
             if (!f.is_homomorphism())
               throw std::invalid_argument("not a homomorphism");
             return f;
           }),
           py::arg("source"), py::arg("target"), py::arg("map"))
      .def_readonly("map", &SemilatticeHom::map)
      .def_readonly("source", &SemilatticeHom::source)
      .def_readonly("target", &SemilatticeHom::target)
      .def("__call__", &SemilatticeHom::operator())
      .def("is_injective", &SemilatticeHom::is_injective)
      .def("is_surjective", &SemilatticeHom::is_surjective);

  m.def("boolean_semilattice", &boolean_semilattice, py::arg("n"),
        py::arg("atom_labels") = std::vector<std::string>{});
  m.def("is_distributive", &is_distributive);
  m.def("distributivity_defect", [](const FiniteSemilattice& S) -> py::object {
    auto w = distributivity_defect(S);
    if (!w) return py::none();
    return py::make_tuple(w->a, w->b0, w->b1);
  });

  m.def("birkhoff", [](const FiniteSemilattice& L) -> py::object {
    BirkhoffDefect defect;
    auto res = birkhoff(L, &defect);
    if (!res)
      return py::make_tuple(py::none(),
                            py::make_tuple(defect.reason, defect.witness));
    py::dict out;
    out["poset"] = res->poset;
    out["join_irreducibles"] = res->join_irreducibles;
    out["iso"] = res->iso;
    return out;
  });

  m.def(
      "embed_boolean",
      [](const FiniteSemilattice& S, const std::string& mode) {
        auto emb = embed_boolean(S, mode == "powerset"
                                        ? EmbedMode::powerset
                                        : EmbedMode::meet_irreducible);
        return py::make_tuple(emb.boolean, emb.index_set, emb.j.map);
      },
      py::arg("S"), py::arg("mode") = "meet-irreducible");

  m.def("extend_hom", &extend_hom, py::arg("B"), py::arg("A"),
        py::arg("f_on_A"), py::arg("S"));

  m.def("triangle_factor", [](const SemilatticeHom& f) {
    auto t = triangle_factor(f);
    return py::make_tuple(t.boolean, t.phi.map, t.g.map);
  });

  m.def(
      "synth_boolean_tower",
      [](const FiniteSemilattice& S, int depth, const std::string& variant) {
        TowerVariant v = variant == "plain" ? TowerVariant::plain
                         : variant == "zero-one" ? TowerVariant::zero_one
                                                 : TowerVariant::zero;
        auto tower = synth_boolean_tower(S, depth, v);
        json doc{{"kind", "resolution"},
                 {"system", io::system_to_json(tower.system)},
                 {"cone", io::cone_to_json(tower.cone)}};
        return io::canonical_dump(doc);
      },
      py::arg("S"), py::arg("depth") = 3, py::arg("variant") = "zero");

  m.def(
      "verify_cone",
      [](const std::string& doc_text, int depth) {
        json doc = parse_doc(doc_text);
        auto system = io::system_from_json(doc.at("system"));
        auto cone = io::cone_from_json(doc.at("cone"));
        for (std::size_t i = 0; i < cone.legs.size(); ++i)
          cone.legs[i].source = system.stages[i];
        auto r = verify_cone(system, cone, depth);
        py::dict out;
        out["certified"] = r.certified();
        out["compatible"] = r.compatible;
        out["final_leg_surjective"] = r.final_leg_surjective;
        out["kernels_stabilize"] = r.kernels_stabilize;
        out["stabilization_offset"] = r.stabilization_offset;
        out["defect"] = r.defect;
        return out;
      },
      py::arg("doc"), py::arg("depth"));

  py::class_<FiniteCommutativeMonoid>(m, "FiniteCommutativeMonoid")
      .def(py::init<std::vector<std::string>, std::vector<int>, int>(),
           py::arg("labels"), py::arg("table"), py::arg("zero"))
      .def_property_readonly("size", &FiniteCommutativeMonoid::size)
      .def("label", &FiniteCommutativeMonoid::label)
      .def("add", &FiniteCommutativeMonoid::add)
      .def("alg_leq", &FiniteCommutativeMonoid::alg_leq);

  m.def("propto", &propto);
  m.def("nabla", [](const FiniteCommutativeMonoid& M) {
    auto r = nabla(M);
    return py::make_tuple(r.quotient, r.projection);
  });
  m.def("property_report", [](const FiniteCommutativeMonoid& M) {
    auto r = property_report(M);
    py::dict out;
    out["refinement"] = r.refinement.holds;
    out["riesz"] = r.riesz.holds;
    out["conical"] = r.conical.holds;
    out["cancellative"] = r.cancellative.holds;
    return out;
  });
  m.def("idc", [](const FiniteCommutativeMonoid& M) {
    auto r = idc(M);
    py::dict out;
    out["semilattice"] = r.semilattice;
    out["theta"] = r.theta;
    out["theta_is_isomorphism"] = r.theta_is_isomorphism;
    return out;
  });

  m.def(
      "strong_rip_witness",
      [](long long n, std::vector<long long> a, std::vector<long long> b,
         std::vector<long long> c, std::vector<long long> d) {
        auto w = strong_rip_witness(n, {std::move(a)}, {std::move(b)},
                                    {std::move(c)}, {std::move(d)});
        return py::make_tuple(w.u.coords, w.v.coords, w.w.coords, w.z.coords);
      },
      py::arg("n"), py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"));

  py::class_<SetLattice>(m, "SetLattice")
      .def(py::init<int, std::vector<Mask>, std::vector<std::string>>(),
           py::arg("ground_size"), py::arg("members"),
           py::arg("ground_labels") = std::vector<std::string>{})
      .def_property_readonly("ground_size", &SetLattice::ground_size)
      .def_property_readonly("members", &SetLattice::members)
      .def("contains", &SetLattice::contains)
      .def("union_semilattice", &SetLattice::union_semilattice);

  auto to_rv = [](const std::vector<std::string>& entries) {
    RationalVector v;
    for (const auto& e : entries) v.entries.push_back(parse_rational(e));
    return v;
  };
  auto from_rv = [](const RationalVector& v) {
    std::vector<std::string> out;
    for (const auto& e : v.entries) out.push_back(rational_to_string(e));
    return out;
  };

  m.def("ratio", [to_rv, from_rv](const std::vector<std::string>& f,
                                  const std::vector<std::string>& g) {
    return from_rv(ratio(to_rv(f), to_rv(g)));
  });
  m.def("is_positive",
        [to_rv](const std::vector<std::string>& f, const SetLattice& D) {
          return is_positive(to_rv(f), D);
        });
  m.def("propto_witness",
        [to_rv](const std::vector<std::string>& f,
                const std::vector<std::string>& g, const SetLattice& D) {
          return propto_witness(to_rv(f), to_rv(g), D);
        });
  m.def("refinement_witness",
        [to_rv, from_rv](const std::vector<std::string>& f0,
                         const std::vector<std::string>& f1,
                         const std::vector<std::string>& g0,
                         const std::vector<std::string>& g1,
                         const SetLattice& D) {
          auto h = refinement_witness(to_rv(f0), to_rv(f1), to_rv(g0),
                                      to_rv(g1), D);
          return py::make_tuple(from_rv(h.h00), from_rv(h.h01), from_rv(h.h10),
                                from_rv(h.h11));
        });
  m.def("iota", [to_rv](const std::vector<std::string>& f, const SetLattice& D) {
    return iota(to_rv(f), D);
  });
  m.def("verify_lift_dlat", [](const SetLattice& D) {
    auto r = verify_lift_dlat(D);
    return py::make_tuple(r.ok, r.defect);
  });

  m.def(
      "synth_tower",
      [](const FiniteSemilattice& S, int depth, bool unital) {
        auto boolean_tower = synth_boolean_tower(
            S, depth, unital ? TowerVariant::zero_one : TowerVariant::zero);
        auto tower = synth_tower(boolean_tower.system, depth, unital);
        auto squares = verify_squares(tower, boolean_tower.system);
        py::list levels;
        for (const auto& level : tower.levels) levels.append(level.sizes);
        py::list maps;
        for (const auto& map : tower.maps) maps.append(map.s);
        return py::make_tuple(levels, maps, squares.ok);
      },
      py::arg("S"), py::arg("depth") = 3, py::arg("unital") = false);

  m.def("poset_dot", &poset_dot);
  m.def("semilattice_dot", &semilattice_dot);

  m.def("load_document", [](const std::string& text) {
    return io::canonical_dump(io::load_document(parse_doc(text)));
  });
}
