#ifndef GRPD_SPLITEXT_HPP
#define GRPD_SPLITEXT_HPP

#include <map>
#include <optional>

#include "grpd/group.hpp"

namespace grpd {

// A split extension
//
//   X >--kappa--> A --alpha--> B,   beta: B -> A,  alpha . beta = id
//
// with kappa the kernel of alpha.  Every a in A factors uniquely as
// kappa(x) * beta(alpha(a)); the x-part is cached at construction.
class SplitExtension {
public:
  // Validates the wiring, alpha . beta = id (SectionNotSplit) and
  // image(kappa) = kernel(alpha) with kappa injective (KernelMismatch).
  static SplitExtension make(GroupHom kappa, GroupHom alpha, GroupHom beta);

  const GroupPtr &kernel_group() const { return kappa_.dom(); }
  const GroupPtr &total() const { return alpha_.dom(); }
  const GroupPtr &base() const { return alpha_.cod(); }
  const GroupHom &kappa() const { return kappa_; }
  const GroupHom &alpha() const { return alpha_; }
  const GroupHom &beta() const { return beta_; }

  // a = kappa(kernel_part(a)) * beta(base_part(a))
  int kernel_part(int a) const { return kernel_part_[a]; }
  int base_part(int a) const { return alpha_(a); }
  int compose_parts(int x, int b) const {
    return total()->mul(kappa_(x), beta_(b));
  }

  // The action of the base on the kernel by conjugation through beta.
  Action action() const;

private:
  SplitExtension(GroupHom kappa, GroupHom alpha, GroupHom beta,
                 std::vector<int> kernel_part)
      : kappa_(std::move(kappa)), alpha_(std::move(alpha)),
        beta_(std::move(beta)), kernel_part_(std::move(kernel_part)) {}

  GroupHom kappa_, alpha_, beta_;
  std::vector<int> kernel_part_;
};

// The split extension X >--> X x| B ->> B built from an action of B on X.
// Pairs (x, b) sit at index x * |B| + b, so beta is b -> b.
SplitExtension semidirect_product(const Action &act);

// Aut(X) acting on X by evaluation; the split extension it generates
// receives a unique morphism from every split extension with kernel X.
SplitExtension generic_split_extension(const GroupPtr &x);

// A morphism of split extensions fixing the kernel: u = id and the three
// squares commute.  v is forced by w.
struct SplitExtMorphism {
  static SplitExtMorphism make(const SplitExtension &src,
                               const SplitExtension &dst, GroupHom v,
                               GroupHom w);
  SplitExtension src;
  SplitExtension dst;
  GroupHom v; // total -> total
  GroupHom w; // base -> base
};

// All morphisms e -> target with u = id.  Enumerates base maps w and keeps
// those whose induced total map v(kappa(x) beta(b)) = kappa'(x) beta'(w(b))
// is a homomorphism; this is exhaustive because v is determined by w.
// Throws Error(KernelMismatch) if the kernels differ.
std::vector<SplitExtMorphism> morphisms_between(const SplitExtension &e,
                                                const SplitExtension &target);

// Counts morphisms e -> target among the given base maps, stopping at cap.
// Used by the oracles, which reuse one hom list across many extensions.
int count_morphisms(const SplitExtension &e, const SplitExtension &target,
                    const std::vector<std::vector<int>> &base_maps, int cap);

// Builds the induced total map for one base map; nullopt if it fails to be a
// homomorphism.
std::optional<std::vector<int>> induced_total_map(const SplitExtension &e,
                                                  const SplitExtension &target,
                                                  const std::vector<int> &w);

// The extension admits at most one morphism from every extension with the
// same kernel iff centralizer(kappa) meets image(beta) trivially.
bool is_faithful_criterion(const SplitExtension &e);

// Hom lists dom -> cod keyed by the endpoint groups.  Warm it up front when
// sharing across threads; get() inserts when missing.  The cache holds
// shared ownership of its keys: a dead group's address could otherwise be
// reused by a new group and alias a stale entry.
class HomCache {
public:
  const std::vector<std::vector<int>> &get(const GroupPtr &dom,
                                           const GroupPtr &cod);

private:
  std::map<std::pair<GroupPtr, GroupPtr>, std::vector<std::vector<int>>>
      table_;
};

// Faithfulness by enumeration: builds every split extension with the same
// kernel from actions of catalog groups of order <= max_base and checks that
// none maps to e in two ways.
bool is_faithful_bruteforce(const SplitExtension &e,
                            const std::vector<GroupPtr> &catalog,
                            int max_base, HomCache *cache = nullptr);

// All actions of base on x, one per homomorphism base -> Aut(x), in hom
// enumeration order.
std::vector<Action> all_actions(const GroupPtr &base, const AutGroup &autx);
std::vector<Action> all_actions(const GroupPtr &base, const GroupPtr &x);

struct VerifyFailure {
  std::string base;
  int structure; // reflexive graph structure index, -1 for plain groups
  int action;
  enum class Kind { Missing, NonUnique } kind;
  int count;
};

struct VerifyReport {
  std::string kernel;
  int candidate_order = 0;
  long cases_checked = 0;
  std::vector<VerifyFailure> failures;
  bool pass() const { return failures.empty(); }
};

// Checks that the candidate receives exactly one morphism from every split
// extension with the same kernel built over the catalog (bases of order
// <= max_base, every action).  jobs <= 0 defers to GRPD_JOBS.
VerifyReport verify_generic(const SplitExtension &candidate,
                            const std::vector<GroupPtr> &catalog,
                            int max_base, int jobs = 0);

} // namespace grpd

#endif // GRPD_SPLITEXT_HPP
