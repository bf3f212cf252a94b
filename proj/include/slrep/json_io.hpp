// JSON ingestion and canonical emission for all document kinds used by
// the command-line front-end.
#ifndef SLREP_JSON_IO_HPP
#define SLREP_JSON_IO_HPP

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "slrep/bergman.hpp"
#include "slrep/boolean_resolution.hpp"
#include "slrep/monoid.hpp"
#include "slrep/order.hpp"
#include "slrep/semilattice.hpp"
#include "slrep/temperate.hpp"

namespace slrep::io {

using json = nlohmann::json;

// Schema or algebra-axiom violation; the message names the offending
// field or axiom.
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json load_file(const std::string& path);

FinitePoset poset_from_json(const json& doc);
json poset_to_json(const FinitePoset& P);

FiniteSemilattice semilattice_from_json(const json& doc);
json semilattice_to_json(const FiniteSemilattice& S);

FiniteCommutativeMonoid monoid_from_json(const json& doc);
json monoid_to_json(const FiniteCommutativeMonoid& M);

SemilatticeHom hom_from_json(const json& doc);
json hom_to_json(const SemilatticeHom& f);

BratteliTower bratteli_from_json(const json& doc);
json bratteli_to_json(const BratteliTower& tower);

RationalVector rational_vector_from_json(const json& doc);
json rational_vector_to_json(const RationalVector& v);

SetLattice set_lattice_from_json(const json& doc);
json set_lattice_to_json(const SetLattice& D);

json system_to_json(const SequentialSystem& system);
SequentialSystem system_from_json(const json& doc);
json cone_to_json(const Cone& cone);
Cone cone_from_json(const json& doc);

// Parses any tagged document and re-emits it canonically (sorted keys,
// input element order); load(emit(x)) == x.
json load_document(const json& doc);

std::string canonical_dump(const json& doc);

}  // namespace slrep::io

#endif
