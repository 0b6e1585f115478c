#ifndef GRPD_LAWS_HPP
#define GRPD_LAWS_HPP

#include <string>
#include <vector>

#include "grpd/groupoid.hpp"

namespace grpd {

// Identities the constructions in this library lean on, as executable
// predicates.  Each check is pure; the suite runners below sweep them over a
// catalog and aggregate witnesses.

// [K, [L, M]] <= [[K, L], M] \/ [[M, K], L] for normal subgroups.
// Throws Error(NotNormal) when one of them is not normal.
bool check_jacobi(const GroupPtr &g, const Subgroup &k, const Subgroup &l,
                  const Subgroup &m);

// [A1 \/ A2, B] = [A1, B] \/ [A2, B] for arbitrary subgroups.
bool check_join_distributivity(const GroupPtr &g, const Subgroup &a1,
                               const Subgroup &a2, const Subgroup &b);

// A subgroup K of the kernel with kappa(K) normal in the total group spans
// a sub-split-extension on join(kappa(K), image(beta)) whose kernel is
// exactly K.  Throws Error(NotNormalInTotal) when kappa(K) is not normal.
bool check_lift(const SplitExtension &e, const Subgroup &k);

// Shared hypothesis of the two lemmas below: [*B, X_*] = 1 = [B_*, *X],
// computed in the total group through beta and kappa.
bool mixed_commutators_vanish(const RGSplitExtension &e);

// With a groupoid kernel and vanishing mixed commutators,
// [X, [A_*, *A]] = 1 in the total group.
bool check_kernel_commutator_lemma(const RGSplitExtension &e);

// With groupoid kernel and base and vanishing mixed commutators, the total
// graph is a groupoid.
bool check_extension_closed(const RGSplitExtension &e);

// For a faithful extension, the base is a groupoid exactly when
// [X, [B_*, *B]] = 1 in the total group.  Throws Error(NotFaithful).
bool check_faithful_codomain_groupoid(const RGSplitExtension &e);

struct LawWitness {
  std::string group;  // carrier (or kernel/base pair) the case was built on
  std::string detail; // the subgroup tuple or structure indices
};

struct LawReport {
  std::string law;
  long cases_checked = 0; // cases whose hypotheses held and were verified
  long vacuous = 0;       // cases skipped because the hypotheses failed
  std::vector<LawWitness> failures;
  bool pass() const { return failures.empty(); }
};

// "jacobi", "join-distributivity", "lift", "kernel-commutator",
// "extension-closed", "faithful-codomain".
std::vector<std::string> law_names();

// Sweeps one law over the catalog.  Group laws run on every catalog group;
// extension laws build their cases from catalog kernels and bases (orders
// capped to keep the sweep exhaustive yet quick).  Throws Error(BadInput)
// for an unknown name.
LawReport run_law(const std::string &law, const std::vector<GroupPtr> &catalog,
                  int jobs = 0);

// Every law, or just the named one; "all" and "" mean every law.
std::vector<LawReport> run_laws(const std::string &law_or_all,
                                const std::vector<GroupPtr> &catalog,
                                int jobs = 0);

} // namespace grpd

#endif // GRPD_LAWS_HPP
