#ifndef GRPD_GROUPOID_HPP
#define GRPD_GROUPOID_HPP

#include "grpd/rgraph.hpp"

namespace grpd {

// A reflexive graph is an internal groupoid exactly when the kernels of its
// two structure maps commute: [ker s, ker t] = 1.
bool is_groupoid(const ReflexiveGraph &g);

class InternalGroupoid {
public:
  // Throws Error(NotGroupoid).
  static InternalGroupoid make(ReflexiveGraph g);

  const ReflexiveGraph &graph() const { return graph_; }
  const GroupPtr &carrier() const { return graph_.carrier(); }

private:
  explicit InternalGroupoid(ReflexiveGraph g) : graph_(std::move(g)) {}

  ReflexiveGraph graph_;
};

class GroupoidSplitExtension {
public:
  // Kernel, total and base must all satisfy the groupoid condition.
  static GroupoidSplitExtension make(RGSplitExtension e);

  const RGSplitExtension &rg() const { return ext_; }

private:
  explicit GroupoidSplitExtension(RGSplitExtension e) : ext_(std::move(e)) {}

  RGSplitExtension ext_;
};

// The largest subobject of the base over which a faithful extension with
// groupoid kernel restricts to an extension of groupoids:
//
//   ((Z1 /\ ker t_B) \/ B0) /\ ((Z2 /\ ker s_B) \/ B0)
//
// computed inside the total group through beta, where Z1 centralizes
// kappa(ker s_X) and Z2 centralizes kappa(ker t_X).
RGSubgraph b_tilde(const RGSplitExtension &e);

// Pullback of e along b_tilde.  Requires rg_is_faithful(e) (NotFaithful)
// and a groupoid kernel (KernelNotGroupoid).
GroupoidSplitExtension largest_groupoid_subextension(const RGSplitExtension &e);

// The split extension classifier in groupoids: the largest groupoid
// sub-extension of the reflexive-graph classifier.
GroupoidSplitExtension groupoid_classifier(const InternalGroupoid &x);

// Existence and uniqueness of morphisms into the candidate from every
// groupoid extension over the catalog: reflexive graph structures on bases
// of order <= max_base that satisfy the groupoid condition, compatible
// actions whose semidirect total is again a groupoid.
VerifyReport grpd_verify_generic(const GroupoidSplitExtension &candidate,
                                 const std::vector<GroupPtr> &catalog,
                                 int max_base, int jobs = 0);

// A crossed module: a homomorphism boundary: T -> G together with an action
// of G on T satisfying equivariance and the Peiffer identity.
class CrossedModule {
public:
  // Throws Error(NotCrossedModule) naming the failing axiom.
  static CrossedModule make(GroupHom boundary, Action act);

  const GroupPtr &t_group() const { return boundary_.dom(); }
  const GroupPtr &g_group() const { return boundary_.cod(); }
  const GroupHom &boundary() const { return boundary_; }
  const Action &action() const { return act_; }

private:
  CrossedModule(GroupHom boundary, Action act)
      : boundary_(std::move(boundary)), act_(std::move(act)) {}

  GroupHom boundary_;
  Action act_;
};

// The equivalence between internal groupoids (cat1-groups) and crossed
// modules: T = ker s with boundary t restricted to it and the object part
// acting by conjugation; back, the total group is T x| G with
// s(tau, g) = (0, g) and t(tau, g) = (0, boundary(tau) g).
CrossedModule cat1_to_xmod(const InternalGroupoid &x);
InternalGroupoid xmod_to_cat1(const CrossedModule &m);

// Isomorphism of crossed modules: group isomorphisms on both levels
// commuting with the boundaries and the actions.
bool xmod_isomorphic(const CrossedModule &a, const CrossedModule &b);

} // namespace grpd

#endif // GRPD_GROUPOID_HPP
