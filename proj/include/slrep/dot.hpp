// DOT (graph description) emission: Hasse diagrams for posets and
// semilattices, layered diagrams for Bratteli towers.
#ifndef SLREP_DOT_HPP
#define SLREP_DOT_HPP

#include <string>

#include "slrep/bergman.hpp"
#include "slrep/order.hpp"
#include "slrep/semilattice.hpp"

namespace slrep {

std::string poset_dot(const FinitePoset& P);
std::string semilattice_dot(const FiniteSemilattice& S);
std::string bratteli_dot(const BratteliTower& tower);

}  // namespace slrep

#endif
