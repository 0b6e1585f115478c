#ifndef GRPD_CATALOG_HPP
#define GRPD_CATALOG_HPP

#include <string>
#include <vector>

#include "grpd/groupoid.hpp"

namespace grpd {

GroupPtr cyclic(int n);
GroupPtr dihedral(int sides); // symmetries of the sides-gon, order 2*sides
GroupPtr dicyclic(int n);     // order 4n; n = 2 gives the quaternions
GroupPtr symmetric(int n);
GroupPtr alternating(int n);

// The same table under a different name.
GroupPtr renamed(const GroupPtr &g, std::string name);
GroupPtr named_product(const GroupPtr &a, const GroupPtr &b, std::string name);

// Every isomorphism type of order <= 12, then Z16, D16 and Q16, in
// ascending group order.
std::vector<GroupPtr> bundled_catalog();

// Conjugation crossed module of a normal subgroup of g.
CrossedModule inclusion_xmod(const GroupPtr &g, const Subgroup &n);

struct NamedXmod {
  std::string name;
  CrossedModule xmod;
};

// Inclusions, quotients to the point and zero-boundary modules; the
// round-trip tests and the exporter both run off this list.
std::vector<NamedXmod> bundled_crossed_modules();

} // namespace grpd

#endif // GRPD_CATALOG_HPP
