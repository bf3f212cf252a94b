#include "slrep/json_io.hpp"

#include <fstream>

namespace slrep::io {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw SchemaError(msg);
}

std::vector<std::string> labels_from(const json& doc, const char* key) {
  require(doc.contains(key) && doc[key].is_array(),
          std::string("missing array field '") + key + "'");
  std::vector<std::string> labels;
  for (const auto& e : doc[key]) {
    require(e.is_string(), std::string("field '") + key + "' must hold strings");
    labels.push_back(e.get<std::string>());
  }
  return labels;
}

std::vector<int> int_row(const json& row, const std::string& what) {
  require(row.is_array(), what + " must be an array");
  std::vector<int> out;
  for (const auto& e : row) {
    require(e.is_number_integer(), what + " must hold integers");
    out.push_back(e.get<int>());
  }
  return out;
}

std::vector<int> int_matrix_flat(const json& m, int n, const std::string& what) {
  require(m.is_array() && static_cast<int>(m.size()) == n,
          what + " must be an " + std::to_string(n) + "-row matrix");
  std::vector<int> flat;
  for (const auto& row : m) {
    auto r = int_row(row, what + " row");
    require(static_cast<int>(r.size()) == n, what + " row of wrong length");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return flat;
}

int label_index(const std::vector<std::string>& labels, const json& ref,
                const std::string& what) {
  if (ref.is_number_integer()) {
    int i = ref.get<int>();
    require(i >= 0 && i < static_cast<int>(labels.size()),
            what + ": index out of range");
    return i;
  }
  require(ref.is_string(), what + ": expected label or index");
  auto it = std::find(labels.begin(), labels.end(), ref.get<std::string>());
  require(it != labels.end(), what + ": unknown label " + ref.get<std::string>());
  return static_cast<int>(it - labels.begin());
}

void check_kind(const json& doc, const std::string& kind) {
  require(doc.is_object(), "document must be a JSON object");
  require(doc.value("kind", kind) == kind,
          "expected kind '" + kind + "', got '" + doc.value("kind", "?") + "'");
}

}  // namespace

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("parse error: ") + e.what());
  }
  return doc;
}

FinitePoset poset_from_json(const json& doc) {
  check_kind(doc, "poset");
  auto labels = labels_from(doc, "elements");
  std::vector<std::pair<int, int>> rel;
  const char* key = doc.contains("covers") ? "covers" : "leq";
  require(doc.contains(key), "poset needs 'covers' or 'leq'");
  for (const auto& pair : doc[key]) {
    require(pair.is_array() && pair.size() == 2, "relation pair must have 2 entries");
    rel.emplace_back(label_index(labels, pair[0], "relation"),
                     label_index(labels, pair[1], "relation"));
  }
  try {
    return FinitePoset(labels, rel,
                       doc.contains("covers") ? RelationInput::covers
                                              : RelationInput::full);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
}

json poset_to_json(const FinitePoset& P) {
  json covers = json::array();
  for (auto& [p, q] : P.covers()) covers.push_back({P.label(p), P.label(q)});
  return json{{"kind", "poset"}, {"elements", P.labels()}, {"covers", covers}};
}

FiniteSemilattice semilattice_from_json(const json& doc) {
  check_kind(doc, "semilattice");
  auto labels = labels_from(doc, "elements");
  const int n = static_cast<int>(labels.size());
  require(doc.contains("join"), "semilattice needs 'join'");
  auto table = int_matrix_flat(doc["join"], n, "join table");
  if (auto defect = validate_join_table(table, n)) {
    std::string msg = "join table fails " + defect->axiom + " at (";
    for (int w : defect->witness)
      if (w >= 0) msg += labels[w] + " ";
    throw SchemaError(msg + ")");
  }
  return FiniteSemilattice(std::move(labels), std::move(table));
}

json semilattice_to_json(const FiniteSemilattice& S) {
  json table = json::array();
  for (int i = 0; i < S.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < S.size(); ++j) row.push_back(S.join(i, j));
    table.push_back(row);
  }
  return json{{"kind", "semilattice"}, {"elements", S.labels()}, {"join", table}};
}

FiniteCommutativeMonoid monoid_from_json(const json& doc) {
  check_kind(doc, "monoid");
  auto labels = labels_from(doc, "elements");
  const int n = static_cast<int>(labels.size());
  require(doc.contains("add"), "monoid needs 'add'");
  auto table = int_matrix_flat(doc["add"], n, "addition table");
  int zero = doc.contains("zero") ? label_index(labels, doc["zero"], "zero") : 0;
  if (auto defect = validate_monoid_table(table, n, zero)) {
    std::string msg = "Cayley table fails " + defect->axiom + " at (";
    for (int w : defect->witness)
      if (w >= 0 && w < n) msg += labels[w] + " ";
    throw SchemaError(msg + ")");
  }
  return FiniteCommutativeMonoid(std::move(labels), std::move(table), zero);
}

json monoid_to_json(const FiniteCommutativeMonoid& M) {
  json table = json::array();
  for (int i = 0; i < M.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < M.size(); ++j) row.push_back(M.add(i, j));
    table.push_back(row);
  }
  return json{{"kind", "monoid"},
              {"elements", M.labels()},
              {"add", table},
              {"zero", M.zero()}};
}

SemilatticeHom hom_from_json(const json& doc) {
  check_kind(doc, "hom");
  require(doc.contains("source") && doc.contains("target") && doc.contains("map"),
          "hom needs 'source', 'target', 'map'");
  SemilatticeHom f{semilattice_from_json(doc["source"]),
                   semilattice_from_json(doc["target"]),
                   int_row(doc["map"], "hom map")};
  require(static_cast<int>(f.map.size()) == f.source.size(),
          "hom map length != source size");
  for (int v : f.map)
    require(v >= 0 && v < f.target.size(), "hom map value out of range");
  require(f.is_homomorphism(), "map is not join-preserving");
  return f;
}

json hom_to_json(const SemilatticeHom& f) {
  return json{{"kind", "hom"},
              {"source", semilattice_to_json(f.source)},
              {"target", semilattice_to_json(f.target)},
              {"map", f.map}};
}

BratteliTower bratteli_from_json(const json& doc) {
  check_kind(doc, "tower");
  BratteliTower tower;
  tower.unital = doc.value("unital", false);
  require(doc.contains("levels") && doc["levels"].is_array(),
          "tower needs 'levels'");
  for (const auto& level : doc["levels"]) {
    require(level.is_object() && level.contains("sizes"), "level needs 'sizes'");
    MatricialShape shape;
    for (const auto& s : level["sizes"]) {
      require(s.is_number_integer(), "sizes must be integers");
      shape.sizes.push_back(s.get<long long>());
    }
    tower.levels.push_back(std::move(shape));
  }
  for (const auto& m : doc.value("maps", json::array())) {
    MultiplicityMatrix mat;
    require(m.is_array(), "map must be a matrix");
    for (const auto& row : m) {
      std::vector<long long> r;
      for (const auto& e : row) {
        require(e.is_number_integer(), "multiplicities must be integers");
        r.push_back(e.get<long long>());
      }
      mat.s.push_back(std::move(r));
    }
    tower.maps.push_back(std::move(mat));
  }
  std::string why;
  require(tower_shapes_valid(tower, &why), "invalid tower: " + why);
  return tower;
}

json bratteli_to_json(const BratteliTower& tower) {
  json levels = json::array();
  for (const auto& level : tower.levels)
    levels.push_back(json{{"sizes", level.sizes}});
  json maps = json::array();
  for (const auto& m : tower.maps) maps.push_back(m.s);
  return json{{"kind", "tower"},
              {"levels", levels},
              {"maps", maps},
              {"unital", tower.unital}};
}

RationalVector rational_vector_from_json(const json& doc) {
  check_kind(doc, "rational_vector");
  require(doc.contains("entries") && doc["entries"].is_array(),
          "rational_vector needs 'entries'");
  RationalVector v;
  for (const auto& e : doc["entries"]) {
    if (e.is_number_integer()) {
      v.entries.emplace_back(e.get<long long>());
    } else {
      require(e.is_string(), "entries must be integers or 'p/q' strings");
      try {
        v.entries.push_back(parse_rational(e.get<std::string>()));
      } catch (const std::invalid_argument& err) {
        throw SchemaError(err.what());
      }
    }
  }
  return v;
}

json rational_vector_to_json(const RationalVector& v) {
  json entries = json::array();
  for (const auto& e : v.entries) entries.push_back(rational_to_string(e));
  return json{{"kind", "rational_vector"}, {"entries", entries}};
}

SetLattice set_lattice_from_json(const json& doc) {
  check_kind(doc, "set_lattice");
  auto ground = labels_from(doc, "ground");
  require(doc.contains("sets") && doc["sets"].is_array(),
          "set_lattice needs 'sets'");
  std::vector<Mask> members;
  for (const auto& s : doc["sets"]) {
    Mask m = 0;
    require(s.is_array(), "each set must be an array");
    for (const auto& e : s) {
      int i = label_index(ground, e, "set member");
      m |= Mask(1) << i;
    }
    members.push_back(m);
  }
  const int ground_size = static_cast<int>(ground.size());
  try {
    return SetLattice(ground_size, std::move(members), std::move(ground));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
}

json set_lattice_to_json(const SetLattice& D) {
  json sets = json::array();
  for (Mask m : D.members()) {
    json s = json::array();
    for (int i = 0; i < D.ground_size(); ++i)
      if ((m >> i) & 1u) s.push_back(i);
    sets.push_back(s);
  }
  return json{{"kind", "set_lattice"},
              {"ground", D.ground_labels()},
              {"sets", sets}};
}

json system_to_json(const SequentialSystem& system) {
  json stages = json::array();
  for (const auto& s : system.stages) stages.push_back(semilattice_to_json(s));
  json transitions = json::array();
  for (const auto& t : system.transitions) transitions.push_back(t.map);
  return json{{"stages", stages}, {"transitions", transitions}};
}

SequentialSystem system_from_json(const json& doc) {
  require(doc.contains("stages") && doc["stages"].is_array(), "missing 'stages'");
  SequentialSystem system;
  for (const auto& s : doc["stages"])
    system.stages.push_back(semilattice_from_json(s));
  const auto& transitions = doc.value("transitions", json::array());
  require(transitions.size() + 1 == system.stages.size() ||
              (system.stages.empty() && transitions.empty()),
          "transition count must be stage count - 1");
  for (std::size_t i = 0; i < transitions.size(); ++i) {
    SemilatticeHom f{system.stages[i], system.stages[i + 1],
                     int_row(transitions[i], "transition")};
    require(f.is_homomorphism(), "transition is not a homomorphism");
    system.transitions.push_back(std::move(f));
  }
  return system;
}

json cone_to_json(const Cone& cone) {
  json legs = json::array();
  for (const auto& leg : cone.legs) legs.push_back(leg.map);
  return json{{"apex", semilattice_to_json(cone.apex)}, {"legs", legs}};
}

Cone cone_from_json(const json& doc) {
  require(doc.contains("apex") && doc.contains("legs"), "cone needs 'apex', 'legs'");
  Cone cone;
  cone.apex = semilattice_from_json(doc["apex"]);
  for (const auto& leg : doc["legs"]) {
    // stage semilattice is attached by the caller; store map with apex only
    SemilatticeHom f;
    f.target = cone.apex;
    f.map = int_row(leg, "cone leg");
    cone.legs.push_back(std::move(f));
  }
  return cone;
}

json load_document(const json& doc) {
  require(doc.is_object() && doc.contains("kind"), "document needs a 'kind' tag");
  const std::string kind = doc["kind"].get<std::string>();
  if (kind == "poset") return poset_to_json(poset_from_json(doc));
  if (kind == "semilattice")
    return semilattice_to_json(semilattice_from_json(doc));
  if (kind == "monoid") return monoid_to_json(monoid_from_json(doc));
  if (kind == "hom") return hom_to_json(hom_from_json(doc));
  if (kind == "tower") return bratteli_to_json(bratteli_from_json(doc));
  if (kind == "rational_vector")
    return rational_vector_to_json(rational_vector_from_json(doc));
  if (kind == "set_lattice")
    return set_lattice_to_json(set_lattice_from_json(doc));
  throw SchemaError("unknown kind '" + kind + "'");
}

std::string canonical_dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace slrep::io
