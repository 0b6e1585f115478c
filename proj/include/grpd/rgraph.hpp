#ifndef GRPD_RGRAPH_HPP
#define GRPD_RGRAPH_HPP

#include <array>

#include "grpd/splitext.hpp"

namespace grpd {

// A reflexive graph in groups: one carrier group G with endomorphisms s, t
// subject to s.t = t and t.s = s.  Both are then idempotent, their images
// coincide and equal their fixed points (the object part G0); the kernels
// ker(s) and ker(t) are the two "directions" of the graph.
class ReflexiveGraph {
public:
  // Throws Error(RelationViolated) naming the broken relation.
  static ReflexiveGraph make(GroupHom s, GroupHom t);

  const GroupPtr &carrier() const { return s_.dom(); }
  const GroupHom &s() const { return s_; }
  const GroupHom &t() const { return t_; }
  const Subgroup &star_g() const { return star_g_; }   // ker s
  const Subgroup &g_star() const { return g_star_; }   // ker t
  const Subgroup &objects() const { return objects_; } // im s = Fix s

  bool operator==(const ReflexiveGraph &other) const;
  bool operator!=(const ReflexiveGraph &other) const {
    return !(*this == other);
  }

private:
  ReflexiveGraph(GroupHom s, GroupHom t, Subgroup star_g, Subgroup g_star,
                 Subgroup objects)
      : s_(std::move(s)), t_(std::move(t)), star_g_(std::move(star_g)),
        g_star_(std::move(g_star)), objects_(std::move(objects)) {}

  GroupHom s_, t_;
  Subgroup star_g_, g_star_, objects_;
};

// The graph with s = t = id (only identity arrows).
ReflexiveGraph discrete(const GroupPtr &g);

struct RGParts {
  Subgroup star_g;
  Subgroup g_star;
  Subgroup objects;
};

RGParts rg_parts(const ReflexiveGraph &g);

// A subgroup of the carrier closed under s and t.
class RGSubgraph {
public:
  static RGSubgraph make(ReflexiveGraph ambient, Subgroup elements);

  const ReflexiveGraph &ambient() const { return ambient_; }
  const Subgroup &subgroup() const { return sub_; }

private:
  RGSubgraph(ReflexiveGraph ambient, Subgroup sub)
      : ambient_(std::move(ambient)), sub_(std::move(sub)) {}

  ReflexiveGraph ambient_;
  Subgroup sub_;
};

// An action of the base graph's carrier on the kernel graph's carrier that
// intertwines both structures: s_X . phi_b = phi_{s_B(b)} . s_X and the same
// for t.  Exactly these actions produce split extensions of reflexive graphs.
class CompatibleAction {
public:
  // Throws Error(IncompatibleAction).
  static CompatibleAction make(Action act, ReflexiveGraph kernel_graph,
                               ReflexiveGraph base_graph);

  const Action &action() const { return act_; }
  const ReflexiveGraph &kernel_graph() const { return kernel_; }
  const ReflexiveGraph &base_graph() const { return base_; }

private:
  CompatibleAction(Action act, ReflexiveGraph kernel, ReflexiveGraph base)
      : act_(std::move(act)), kernel_(std::move(kernel)),
        base_(std::move(base)) {}

  Action act_;
  ReflexiveGraph kernel_;
  ReflexiveGraph base_;
};

bool is_compatible(const Action &act, const ReflexiveGraph &kernel_graph,
                   const ReflexiveGraph &base_graph);

// A split extension of reflexive graphs: a split extension of the carriers
// whose three maps all commute with s and t.
class RGSplitExtension {
public:
  static RGSplitExtension make(SplitExtension ext, ReflexiveGraph kernel_graph,
                               ReflexiveGraph total_graph,
                               ReflexiveGraph base_graph);

  const SplitExtension &ext() const { return ext_; }
  const ReflexiveGraph &kernel_graph() const { return kernel_; }
  const ReflexiveGraph &total_graph() const { return total_; }
  const ReflexiveGraph &base_graph() const { return base_; }

  CompatibleAction action() const;

private:
  RGSplitExtension(SplitExtension ext, ReflexiveGraph kernel,
                   ReflexiveGraph total, ReflexiveGraph base)
      : ext_(std::move(ext)), kernel_(std::move(kernel)),
        total_(std::move(total)), base_(std::move(base)) {}

  SplitExtension ext_;
  ReflexiveGraph kernel_;
  ReflexiveGraph total_;
  ReflexiveGraph base_;
};

// Semidirect product of reflexive graphs along a compatible action; the
// structure maps act coordinatewise.
RGSplitExtension rg_split_extension(const CompatibleAction &ca);

// The classifier of split extensions of reflexive graphs with kernel x.
// Its base carrier is the group of triples (f, g, h) of automorphisms of the
// kernel carrier with
//   s.f = g.s,  t.f = h.t,  g.s = s.g,  g.t = t.g,  h.s = s.h,  h.t = t.h,
// multiplied coordinatewise, with S(f,g,h) = (g,g,g), T(f,g,h) = (h,h,h),
// acting on x through the first coordinate.
struct RGClassifier {
  AutGroup aut;                            // of the kernel carrier
  std::vector<std::array<int, 3>> triples; // indices into aut
  ReflexiveGraph base;
  CompatibleAction action;
  RGSplitExtension ext;
};

RGClassifier rg_classifier(const ReflexiveGraph &x);

// Largest s,t-closed subgroup whose inclusion cooperates with the
// inclusion of s: meet of the plain centralizer with its preimages under
// s and t.
RGSubgraph rg_centralizer(const RGSubgraph &s);

// At most one morphism from every extension of the same kernel graph:
// the intersection of the centralizer of kappa with its s- and t-preimages
// must meet the section trivially.
bool rg_is_faithful(const RGSplitExtension &e);

// Every reflexive graph structure on g: pairs of endomorphisms (s, t) with
// s.t = t and t.s = s, in endomorphism enumeration order.
std::vector<ReflexiveGraph> all_rg_structures(const GroupPtr &g);

// Compatible actions of the base graph on x, filtered from all_actions.
std::vector<CompatibleAction> compatible_actions(const ReflexiveGraph &base,
                                                 const ReflexiveGraph &x,
                                                 const AutGroup &autx);

// Morphisms of reflexive-graph extensions: the underlying split extension
// morphisms whose base map commutes with s and t.  (The total map then does
// too.)
std::vector<SplitExtMorphism>
rg_morphisms_between(const RGSplitExtension &e, const RGSplitExtension &target);

int count_rg_morphisms(const RGSplitExtension &e,
                       const RGSplitExtension &target,
                       const std::vector<std::vector<int>> &base_maps, int cap);

// Existence and uniqueness of a morphism into the candidate from every
// extension built over the catalog: all reflexive graph structures on bases
// of order <= max_base, all compatible actions.
VerifyReport rg_verify_generic(const RGSplitExtension &candidate,
                               const std::vector<GroupPtr> &catalog,
                               int max_base, int jobs = 0);

// Isomorphism of reflexive graphs: a carrier isomorphism commuting with
// both structure maps.
bool rg_isomorphic(const ReflexiveGraph &a, const ReflexiveGraph &b);

// All s,t-closed subgroups of the base, as subgraphs.
std::vector<RGSubgraph> sub_reflexive_graphs(const ReflexiveGraph &g);

// The sub-extension over an s,t-closed subgroup B' of the base: total is the
// alpha-preimage of B', kernel is unchanged, structure maps restrict.
RGSplitExtension restrict_to_base(const RGSplitExtension &e,
                                  const RGSubgraph &base_part);

} // namespace grpd

#endif // GRPD_RGRAPH_HPP
