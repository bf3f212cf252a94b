// Command-line front-end: JSON in, JSON reports out, DOT emission.
// Exit codes: 0 success/property-true, 1 property-false/absence (witness
// in the report), 2 input error.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "slrep/dot.hpp"
#include "slrep/json_io.hpp"

using slrep::io::json;

namespace {

int emit(const json& report, const std::string& out_path) {
  std::string text = slrep::io::canonical_dump(report);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return 2;
    }
    out << text;
  }
  return 0;
}

int emit_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return 2;
    }
    out << text;
  }
  return 0;
}

json witness_labels(const slrep::FiniteSemilattice& S, std::vector<int> idx) {
  json out = json::array();
  for (int i : idx) out.push_back(S.label(i));
  return out;
}

slrep::TowerVariant parse_variant(const std::string& v) {
  if (v == "plain") return slrep::TowerVariant::plain;
  if (v == "zero") return slrep::TowerVariant::zero;
  if (v == "zero-one" || v == "zero_one") return slrep::TowerVariant::zero_one;
  throw slrep::io::SchemaError("unknown variant '" + v + "'");
}

json cone_report_to_json(const slrep::ConeReport& r) {
  json out{{"certified", r.certified()},
           {"compatible", r.compatible},
           {"final_leg_surjective", r.final_leg_surjective},
           {"kernels_stabilize", r.kernels_stabilize},
           {"checked_depth", r.checked_depth},
           {"stabilization_offset", r.stabilization_offset}};
  if (!r.defect.empty()) {
    out["defect"] = r.defect;
    out["defect_stage"] = r.defect_stage;
    if (r.defect_x >= 0) out["defect_pair"] = {r.defect_x, r.defect_y};
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite representations of distributive semilattices"};
  app.require_subcommand(1);

  std::string file, out_path, variant = "zero", mode = "meet-irreducible";
  std::string temperate_op;
  int depth = 3;
  bool unital = false;
  unsigned seed = 0;
  bool flag_distributive = false, flag_refinement = false, flag_riesz = false;
  bool flag_conical = false, flag_cancellative = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "input JSON document")->required();
    cmd->add_option("--out", out_path, "write the report to PATH");
  };

  auto* c_check = app.add_subcommand("check", "validate and test properties");
  add_common(c_check);
  c_check->add_flag("--distributive", flag_distributive);
  c_check->add_flag("--refinement", flag_refinement);
  c_check->add_flag("--riesz", flag_riesz);
  c_check->add_flag("--conical", flag_conical);
  c_check->add_flag("--cancellative", flag_cancellative);

  auto* c_birkhoff = app.add_subcommand("birkhoff", "poset of join-irreducibles");
  add_common(c_birkhoff);

  auto* c_embed = app.add_subcommand("embed", "Boolean embedding");
  add_common(c_embed);
  c_embed->add_option("--mode", mode, "powerset | meet-irreducible");

  auto* c_extend = app.add_subcommand("extend", "extend a partial homomorphism");
  add_common(c_extend);

  auto* c_factor = app.add_subcommand("factor", "factor a hom through its kernel");
  add_common(c_factor);

  auto* c_tower = app.add_subcommand("tower", "Boolean resolution tower");
  add_common(c_tower);
  c_tower->add_option("--depth", depth);
  c_tower->add_option("--variant", variant, "plain | zero | zero-one");

  auto* c_vcone = app.add_subcommand("verify-cone", "certify a resolution");
  add_common(c_vcone);
  c_vcone->add_option("--depth", depth);

  auto* c_nabla = app.add_subcommand("nabla", "maximal semilattice quotient");
  add_common(c_nabla);

  auto* c_idc = app.add_subcommand("idc", "ideal semilattice and theta");
  add_common(c_idc);

  auto* c_rip = app.add_subcommand("rip-witness", "strong interpolation witness");
  add_common(c_rip);

  auto* c_temp = app.add_subcommand("temperate", "exact-rational cone operations");
  add_common(c_temp);
  c_temp->add_option("--op", temperate_op,
                     "ratio | positive | propto | refine | iota | verify-dlat")
      ->required();

  auto* c_lift = app.add_subcommand("lift", "lift a lattice chain to matrices");
  add_common(c_lift);

  auto* c_bergman = app.add_subcommand("bergman", "Bratteli tower synthesis");
  add_common(c_bergman);
  c_bergman->add_option("--depth", depth);
  c_bergman->add_flag("--unital", unital);
  c_bergman->add_option("--variant", variant);

  auto* c_dot = app.add_subcommand("dot", "DOT diagram emission");
  add_common(c_dot);

  app.add_option("--seed", seed, "seed for randomized suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    json doc = slrep::io::load_file(file);

    if (c_check->parsed()) {
      const std::string kind = doc.value("kind", "semilattice");
      json report;
      bool failed = false;
      if (kind == "semilattice") {
        auto S = slrep::io::semilattice_from_json(doc);
        report["valid"] = true;
        if (flag_distributive) {
          auto w = slrep::distributivity_defect(S);
          report["distributive"] = !w.has_value();
          if (w) {
            report["witness"] = witness_labels(S, {w->a, w->b0, w->b1});
            failed = true;
          }
        }
      } else if (kind == "monoid") {
        auto M = slrep::io::monoid_from_json(doc);
        report["valid"] = true;
        auto props = slrep::property_report(M);
        auto put = [&](const char* name, const slrep::PropertyFlag& flag,
                       bool requested) {
          report[name] = flag.holds;
          if (!flag.holds) {
            json w = json::array();
            for (int i : flag.witness) w.push_back(M.label(i));
            report[std::string(name) + "_witness"] = w;
            if (requested) failed = true;
          }
        };
        put("refinement", props.refinement, flag_refinement);
        put("riesz", props.riesz, flag_riesz);
        put("conical", props.conical, flag_conical);
        put("cancellative", props.cancellative, flag_cancellative);
      } else {
        report = slrep::io::load_document(doc);
        report = json{{"valid", true}, {"kind", kind}};
      }
      int rc = emit(report, out_path);
      return rc != 0 ? rc : (failed ? 1 : 0);
    }

    if (c_birkhoff->parsed()) {
      auto S = slrep::io::semilattice_from_json(doc);
      slrep::BirkhoffDefect defect;
      auto res = slrep::birkhoff(S, &defect);
      if (!res) {
        json report{{"ok", false},
                    {"reason", defect.reason},
                    {"witness", witness_labels(S, defect.witness)}};
        int rc = emit(report, out_path);
        return rc != 0 ? rc : 1;
      }
      json iso = json::array();
      for (std::size_t k = 0; k < res->iso.size(); ++k)
        iso.push_back({res->dual.lattice.label(static_cast<int>(k)),
                       S.label(res->iso[k])});
      json report{{"ok", true},
                  {"poset", slrep::io::poset_to_json(res->poset)},
                  {"join_irreducibles", witness_labels(S, res->join_irreducibles)},
                  {"iso", iso}};
      return emit(report, out_path);
    }

    if (c_embed->parsed()) {
      auto S = slrep::io::semilattice_from_json(doc);
      auto m = mode == "powerset" ? slrep::EmbedMode::powerset
                                  : slrep::EmbedMode::meet_irreducible;
      auto emb = slrep::embed_boolean(S, m);
      json report{{"rank", static_cast<int>(emb.index_set.size())},
                  {"index_set", witness_labels(S, emb.index_set)},
                  {"map", emb.j.map}};
      return emit(report, out_path);
    }

    if (c_extend->parsed()) {
      auto B = doc.contains("B") && doc["B"].is_object() &&
                       doc["B"].contains("boolean")
                   ? slrep::boolean_semilattice(doc["B"]["boolean"].get<int>())
                   : slrep::io::semilattice_from_json(doc.at("B"));
      auto S = slrep::io::semilattice_from_json(doc.at("S"));
      std::vector<int> A = doc.at("A").get<std::vector<int>>();
      std::vector<int> f = doc.at("f").get<std::vector<int>>();
      auto g = slrep::extend_hom(B, A, f, S);
      return emit(json{{"map", g}}, out_path);
    }

    if (c_factor->parsed()) {
      auto f = slrep::io::hom_from_json(doc);
      auto fac = slrep::factor_hom(f);
      json report{{"quotient", slrep::io::semilattice_to_json(fac.quotient)},
                  {"projection", fac.projection.map},
                  {"embedding", fac.embedding.map},
                  {"blocks", fac.ker.block_of}};
      return emit(report, out_path);
    }

    if (c_tower->parsed()) {
      auto S = slrep::io::semilattice_from_json(doc);
      auto tower = slrep::synth_boolean_tower(S, depth, parse_variant(variant));
      json report{{"kind", "resolution"},
                  {"system", slrep::io::system_to_json(tower.system)},
                  {"cone", slrep::io::cone_to_json(tower.cone)}};
      return emit(report, out_path);
    }

    if (c_vcone->parsed()) {
      auto system = slrep::io::system_from_json(doc.at("system"));
      auto cone = slrep::io::cone_from_json(doc.at("cone"));
      if (cone.legs.size() != system.stages.size())
        throw slrep::io::SchemaError("leg count != stage count");
      for (std::size_t i = 0; i < cone.legs.size(); ++i)
        cone.legs[i].source = system.stages[i];
      auto report = slrep::verify_cone(system, cone, depth);
      int rc = emit(cone_report_to_json(report), out_path);
      return rc != 0 ? rc : (report.certified() ? 0 : 1);
    }

    if (c_nabla->parsed()) {
      auto M = slrep::io::monoid_from_json(doc);
      auto res = slrep::nabla(M);
      json report{{"quotient", slrep::io::semilattice_to_json(res.quotient)},
                  {"projection", res.projection}};
      return emit(report, out_path);
    }

    if (c_idc->parsed()) {
      auto M = slrep::io::monoid_from_json(doc);
      auto res = slrep::idc(M);
      json ideals = json::array();
      for (slrep::Mask m : res.ideals) {
        json s = json::array();
        for (int x = 0; x < M.size(); ++x)
          if ((m >> x) & 1u) s.push_back(M.label(x));
        ideals.push_back(s);
      }
      json report{{"semilattice", slrep::io::semilattice_to_json(res.semilattice)},
                  {"ideals", ideals},
                  {"theta", res.theta},
                  {"theta_isomorphism", res.theta_is_isomorphism},
                  {"distributive", slrep::is_distributive(res.semilattice)}};
      return emit(report, out_path);
    }

    if (c_rip->parsed()) {
      slrep::SimplicialElement a{doc.at("a").get<std::vector<long long>>()};
      slrep::SimplicialElement b{doc.at("b").get<std::vector<long long>>()};
      slrep::SimplicialElement c{doc.at("c").get<std::vector<long long>>()};
      slrep::SimplicialElement d{doc.at("d").get<std::vector<long long>>()};
      auto w = slrep::strong_rip_witness(doc.at("n").get<long long>(), a, b, c, d);
      json report{{"u", w.u.coords}, {"v", w.v.coords},
                  {"w", w.w.coords}, {"z", w.z.coords}};
      return emit(report, out_path);
    }

    if (c_temp->parsed()) {
      auto D = slrep::io::set_lattice_from_json(doc.at("D"));
      auto vec = [&](const char* key) {
        return slrep::io::rational_vector_from_json(doc.at(key));
      };
      if (temperate_op == "ratio") {
        return emit(json{{"result", slrep::io::rational_vector_to_json(
                                        slrep::ratio(vec("f"), vec("g")))}},
                    out_path);
      }
      if (temperate_op == "positive") {
        bool pos = slrep::is_positive(vec("f"), D);
        int rc = emit(json{{"positive", pos}}, out_path);
        return rc != 0 ? rc : (pos ? 0 : 1);
      }
      if (temperate_op == "propto") {
        auto n = slrep::propto_witness(vec("f"), vec("g"), D);
        json report = n ? json{{"witness", *n}} : json{{"witness", nullptr}};
        int rc = emit(report, out_path);
        return rc != 0 ? rc : (n ? 0 : 1);
      }
      if (temperate_op == "refine") {
        auto h = slrep::refinement_witness(vec("f0"), vec("f1"), vec("g0"),
                                           vec("g1"), D);
        json report{{"h00", slrep::io::rational_vector_to_json(h.h00)},
                    {"h01", slrep::io::rational_vector_to_json(h.h01)},
                    {"h10", slrep::io::rational_vector_to_json(h.h10)},
                    {"h11", slrep::io::rational_vector_to_json(h.h11)}};
        return emit(report, out_path);
      }
      if (temperate_op == "iota") {
        slrep::Mask m = slrep::iota(vec("f"), D);
        json support = json::array();
        for (int i = 0; i < D.ground_size(); ++i)
          if ((m >> i) & 1u) support.push_back(D.ground_labels()[i]);
        return emit(json{{"support", support}}, out_path);
      }
      if (temperate_op == "verify-dlat") {
        auto report = slrep::verify_lift_dlat(D);
        json out{{"ok", report.ok}};
        if (!report.ok) out["defect"] = report.defect;
        else out["semilattice"] = slrep::io::semilattice_to_json(report.image);
        int rc = emit(out, out_path);
        return rc != 0 ? rc : (report.ok ? 0 : 1);
      }
      throw slrep::io::SchemaError("unknown temperate op '" + temperate_op + "'");
    }

    if (c_lift->parsed()) {
      std::vector<slrep::FiniteSemilattice> stages;
      for (const auto& s : doc.at("chain"))
        stages.push_back(slrep::io::semilattice_from_json(s));
      std::vector<slrep::SemilatticeHom> inclusions;
      for (std::size_t i = 0; i + 1 < stages.size(); ++i) {
        std::vector<int> map(stages[i].size());
        for (int x = 0; x < stages[i].size(); ++x) {
          const auto& labels = stages[i + 1].labels();
          auto it = std::find(labels.begin(), labels.end(), stages[i].label(x));
          if (it == labels.end())
            throw slrep::io::SchemaError("chain stage " + std::to_string(i) +
                                         " element '" + stages[i].label(x) +
                                         "' missing from the next stage");
          map[x] = static_cast<int>(it - labels.begin());
        }
        inclusions.push_back(
            slrep::SemilatticeHom{stages[i], stages[i + 1], std::move(map)});
      }
      auto res = slrep::lift_tower(stages, inclusions);
      json posets = json::array();
      json matrices = json::array();
      for (const auto& dual : res.duals)
        posets.push_back(slrep::io::poset_to_json(dual.poset));
      for (const auto& m : res.matrices) matrices.push_back(m);
      json report{{"posets", posets},
                  {"matrices", matrices},
                  {"squares_ok", res.squares_ok}};
      if (!res.defect.empty()) report["defect"] = res.defect;
      int rc = emit(report, out_path);
      return rc != 0 ? rc : (res.squares_ok ? 0 : 1);
    }

    if (c_bergman->parsed()) {
      auto S = slrep::io::semilattice_from_json(doc);
      auto vparsed = unital && variant == "zero" ? slrep::TowerVariant::zero_one
                                                 : parse_variant(variant);
      auto boolean_tower = slrep::synth_boolean_tower(S, depth, vparsed);
      auto tower = slrep::synth_tower(boolean_tower.system, depth, unital);
      auto squares = slrep::verify_squares(tower, boolean_tower.system);
      json report{{"tower", slrep::io::bratteli_to_json(tower)},
                  {"squares_certified", squares.ok}};
      if (!squares.ok) report["defect"] = squares.defect;
      int rc = emit(report, out_path);
      return rc != 0 ? rc : (squares.ok ? 0 : 1);
    }

    if (c_dot->parsed()) {
      const std::string kind = doc.value("kind", "");
      if (kind == "poset")
        return emit_text(slrep::poset_dot(slrep::io::poset_from_json(doc)),
                         out_path);
      if (kind == "semilattice")
        return emit_text(
            slrep::semilattice_dot(slrep::io::semilattice_from_json(doc)),
            out_path);
      if (kind == "tower")
        return emit_text(
            slrep::bratteli_dot(slrep::io::bratteli_from_json(doc)), out_path);
      throw slrep::io::SchemaError("dot: unsupported kind '" + kind + "'");
    }
  } catch (const slrep::io::SchemaError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
