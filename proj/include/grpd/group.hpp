#ifndef GRPD_GROUP_HPP
#define GRPD_GROUP_HPP

#include <memory>
#include <string>
#include <vector>

#include "grpd/error.hpp"

namespace grpd {

class FiniteGroup;

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// A finite group given by its full multiplication table.  Elements are the
// indices 0..n-1 and the identity is always index 0.  Instances are immutable
// after construction and shared by pointer, so they are safe to use from
// several threads at once.
class FiniteGroup {
public:
  // Validates the table (closure, identity at 0, inverses, associativity)
  // and returns the group.  Throws Error with kind NoIdentity,
  // IdentityNotZero, NoInverse or NotAssociative.
  static GroupPtr make(int order, std::vector<int> flat_table,
                       std::string name = "");
  static GroupPtr make(const std::vector<std::vector<int>> &table,
                       std::string name = "");

  int order() const noexcept { return n_; }
  int mul(int a, int b) const { return table_[static_cast<size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  // g x g^-1
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
  // a b a^-1 b^-1
  int comm(int a, int b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }
  int power(int a, int e) const;
  int element_order(int a) const { return elem_order_[a]; }

  bool is_abelian() const;

  // A minimal generating set found greedily by least index; empty for the
  // trivial group.  Fixed at construction, so it is usable as a shared
  // shortcut when checking homomorphism candidates.
  const std::vector<int> &generators() const noexcept { return gens_; }

  const std::string &name() const noexcept { return name_; }
  const std::vector<int> &flat_table() const noexcept { return table_; }

private:
  FiniteGroup() = default;

  int n_ = 0;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::vector<int> elem_order_;
  std::vector<int> gens_;
  std::string name_;
};

// Structural equality of the underlying tables; names are ignored.
bool same_table(const FiniteGroup &a, const FiniteGroup &b);
// Pointer equality with a structural fallback.  Used for all "same parent"
// preconditions.
bool same_group(const GroupPtr &a, const GroupPtr &b);

class GroupHom {
public:
  // Validates that map describes a homomorphism dom -> cod (map[0] = 0 and
  // multiplicativity); throws Error(NotHomomorphism) otherwise.
  static GroupHom make(GroupPtr dom, GroupPtr cod, std::vector<int> map);
  static GroupHom identity(GroupPtr g);
  static GroupHom zero(GroupPtr dom, GroupPtr cod);

  int operator()(int x) const { return map_[x]; }
  const GroupPtr &dom() const noexcept { return dom_; }
  const GroupPtr &cod() const noexcept { return cod_; }
  const std::vector<int> &map() const noexcept { return map_; }

  bool is_injective() const;
  bool is_surjective() const;
  bool is_identity() const;

  bool operator==(const GroupHom &other) const;

private:
  GroupHom(GroupPtr dom, GroupPtr cod, std::vector<int> map)
      : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(map)) {}

  GroupPtr dom_;
  GroupPtr cod_;
  std::vector<int> map_;
};

// (f . g)(x) = f(g(x)); requires g.cod and f.dom to be the same group.
GroupHom compose(const GroupHom &f, const GroupHom &g);

// True when map (a full table dom -> cod) sends 0 to 0 and is multiplicative.
// Multiplicativity is checked against dom's generating set, which is
// equivalent to checking every pair.
bool is_hom_map(const FiniteGroup &dom, const FiniteGroup &cod,
                const std::vector<int> &map);

// A subgroup of a fixed parent group, stored as the sorted list of its
// elements.
class Subgroup {
public:
  // Validates closure and membership of the identity.
  static Subgroup make(GroupPtr parent, std::vector<int> elements);
  // Subgroup generated by the given elements.
  static Subgroup generated(GroupPtr parent, const std::vector<int> &gens);
  static Subgroup trivial(GroupPtr parent);
  static Subgroup full(GroupPtr parent);

  const GroupPtr &parent() const noexcept { return parent_; }
  const std::vector<int> &elements() const noexcept { return elements_; }
  int size() const noexcept { return static_cast<int>(elements_.size()); }
  bool contains(int x) const;
  bool is_trivial() const noexcept { return elements_.size() == 1; }
  bool is_full() const { return size() == parent_->order(); }
  bool is_normal() const;
  bool subset_of(const Subgroup &other) const;

  // Same parent (structurally) and same element set.
  bool operator==(const Subgroup &other) const;
  bool operator!=(const Subgroup &other) const { return !(*this == other); }

private:
  Subgroup(GroupPtr parent, std::vector<int> elements)
      : parent_(std::move(parent)), elements_(std::move(elements)) {}

  GroupPtr parent_;
  std::vector<int> elements_; // sorted, always contains 0
};

Subgroup kernel(const GroupHom &f);
Subgroup image(const GroupHom &f);
Subgroup image_of(const GroupHom &f, const Subgroup &s);

// The subgroup as a group in its own right.  Element i of group is
// elements()[i] of the parent; inclusion embeds it back.
struct SubgroupGroup {
  GroupPtr group;
  GroupHom inclusion;
  std::vector<int> index_of; // parent element -> subgroup index, -1 outside
};

SubgroupGroup as_group(const Subgroup &s);

struct Quotient {
  GroupPtr group;
  GroupHom projection;
};

// Quotient by a normal subgroup.  Cosets are named by their least element and
// ordered by it, so the identity coset is index 0.  Throws Error(NotNormal).
Quotient quotient(const GroupPtr &g, const Subgroup &n);

struct DirectProduct {
  GroupPtr group; // (a, b) at index a * |B| + b
  GroupHom proj1, proj2;
  GroupHom inj1, inj2;
};

DirectProduct direct_product(const GroupPtr &a, const GroupPtr &b);

// An action of actor on target by automorphisms: assignment[b] is the
// automorphism applied by b, and assignment respects multiplication.
class Action {
public:
  static Action make(GroupPtr actor, GroupPtr target,
                     std::vector<std::vector<int>> assignment);
  static Action trivial(GroupPtr actor, GroupPtr target);

  int apply(int b, int x) const { return assignment_[b][x]; }
  const GroupPtr &actor() const noexcept { return actor_; }
  const GroupPtr &target() const noexcept { return target_; }
  const std::vector<std::vector<int>> &assignment() const noexcept {
    return assignment_;
  }
  bool is_trivial() const;

  bool operator==(const Action &other) const;

private:
  Action(GroupPtr actor, GroupPtr target,
         std::vector<std::vector<int>> assignment)
      : actor_(std::move(actor)), target_(std::move(target)),
        assignment_(std::move(assignment)) {}

  GroupPtr actor_;
  GroupPtr target_;
  std::vector<std::vector<int>> assignment_;
};

// The automorphism group of `of` realised as a FiniteGroup.  autos[i] is the
// permutation table of automorphism i, the list is sorted lexicographically
// (which puts the identity first), and group->mul matches composition:
// autos[group->mul(i, j)] == autos[i] after autos[j].
struct AutGroup {
  GroupPtr of;
  GroupPtr group;
  std::vector<std::vector<int>> autos;
};

AutGroup automorphism_group(const GroupPtr &g);

// The evaluation action of automorphism_group(g) on g.
Action evaluation_action(const AutGroup &aut);

// All homomorphisms dom -> cod as map tables, in a fixed deterministic order
// (backtracking over images of dom's generating set).
std::vector<std::vector<int>> all_homs(const GroupPtr &dom,
                                       const GroupPtr &cod);
std::vector<std::vector<int>> all_isomorphisms(const GroupPtr &a,
                                               const GroupPtr &b);
bool is_isomorphic(const GroupPtr &a, const GroupPtr &b);

} // namespace grpd

#endif // GRPD_GROUP_HPP
