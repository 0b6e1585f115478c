#ifndef GRPD_LATTICE_HPP
#define GRPD_LATTICE_HPP

#include <optional>

#include "grpd/group.hpp"

namespace grpd {

// Lattice operations on subgroups of a common parent.

Subgroup join(const Subgroup &a, const Subgroup &b);
Subgroup meet(const Subgroup &a, const Subgroup &b);
Subgroup normal_closure(const Subgroup &a);

// Smallest normal subgroup D of the parent such that a and b commute
// elementwise modulo D: the normal closure of all commutators [x, y] with
// x in a, y in b.
Subgroup huq_commutator(const Subgroup &a, const Subgroup &b);

// The map (x, y) -> f(x) g(y) on dom(f) x dom(g), returned iff it is a
// homomorphism, which happens exactly when the images of f and g commute
// elementwise.
std::optional<GroupHom> cooperate(const GroupHom &f, const GroupHom &g);

// Elements of cod(f) commuting with every element of image(f).
Subgroup centralizer(const GroupHom &f);
Subgroup centralizer(const Subgroup &s);

// Largest subgroup of the parent in which a is normal.
Subgroup normalizer(const Subgroup &a);

Subgroup preimage(const GroupHom &f, const Subgroup &s);

// Every subgroup of g, sorted by (size, elements).  Exhaustive closure scan;
// meant for the small groups of the bundled catalog.
std::vector<Subgroup> all_subgroups(const GroupPtr &g);
std::vector<Subgroup> normal_subgroups(const GroupPtr &g);

} // namespace grpd

#endif // GRPD_LATTICE_HPP
