#include "grpd/groupoid.hpp"

#include <algorithm>

#include "grpd/lattice.hpp"
#include "grpd/parallel.hpp"

namespace grpd {

namespace {

std::string display_name(const GroupPtr &g) {
  if (!g->name().empty())
    return g->name();
  return "group(" + std::to_string(g->order()) + ")";
}

void internal_check(bool cond, const char *what) {
  if (!cond)
    throw std::logic_error(std::string("internal invariant failed: ") + what);
}

} // namespace

bool is_groupoid(const ReflexiveGraph &g) {
  return huq_commutator(g.star_g(), g.g_star()).is_trivial();
}

InternalGroupoid InternalGroupoid::make(ReflexiveGraph g) {
  if (!is_groupoid(g))
    throw Error(ErrorKind::NotGroupoid,
                "[ker s, ker t] is not trivial");
  return InternalGroupoid(std::move(g));
}

GroupoidSplitExtension GroupoidSplitExtension::make(RGSplitExtension e) {
  if (!is_groupoid(e.kernel_graph()))
    throw Error(ErrorKind::NotGroupoid, "kernel graph is not a groupoid");
  if (!is_groupoid(e.total_graph()))
    throw Error(ErrorKind::NotGroupoid, "total graph is not a groupoid");
  if (!is_groupoid(e.base_graph()))
    throw Error(ErrorKind::NotGroupoid, "base graph is not a groupoid");
  return GroupoidSplitExtension(std::move(e));
}

RGSubgraph b_tilde(const RGSplitExtension &e) {
  const ReflexiveGraph &x = e.kernel_graph();
  const ReflexiveGraph &b = e.base_graph();
  const GroupHom &kappa = e.ext().kappa();
  const GroupHom &beta = e.ext().beta();

  // All terms live inside the total group, where the comparisons happen;
  // the result is pulled back along beta at the end.
  Subgroup z1 = centralizer(image_of(kappa, x.star_g()));
  Subgroup z2 = centralizer(image_of(kappa, x.g_star()));
  Subgroup b_star = image_of(beta, b.g_star());  // arrows ending at 0
  Subgroup star_b = image_of(beta, b.star_g());  // arrows starting at 0
  Subgroup b0 = image_of(beta, b.objects());

  Subgroup side1 = join(meet(z1, b_star), b0);
  Subgroup side2 = join(meet(z2, star_b), b0);
  Subgroup result = preimage(beta, meet(side1, side2));

  RGSubgraph out = RGSubgraph::make(b, std::move(result));

  // The defining property of the construction: the s-kernel part of the
  // result centralizes kappa(ker t) and vice versa.
  const Subgroup &bt = out.subgroup();
  std::vector<int> star_bt, bt_star;
  for (int v : bt.elements()) {
    if (b.s()(v) == 0)
      star_bt.push_back(v);
    if (b.t()(v) == 0)
      bt_star.push_back(v);
  }
  Subgroup star_bt_in_a =
      image_of(beta, Subgroup::make(b.carrier(), std::move(star_bt)));
  Subgroup bt_star_in_a =
      image_of(beta, Subgroup::make(b.carrier(), std::move(bt_star)));
  internal_check(
      huq_commutator(star_bt_in_a, image_of(kappa, x.g_star())).is_trivial(),
      "b_tilde: [*B~, X_*] != 1");
  internal_check(
      huq_commutator(bt_star_in_a, image_of(kappa, x.star_g())).is_trivial(),
      "b_tilde: [B~_*, *X] != 1");
  return out;
}

GroupoidSplitExtension
largest_groupoid_subextension(const RGSplitExtension &e) {
  if (!is_groupoid(e.kernel_graph()))
    throw Error(ErrorKind::KernelNotGroupoid,
                "kernel graph is not a groupoid");
  if (!rg_is_faithful(e))
    throw Error(ErrorKind::NotFaithful,
                "extension admits multiple morphisms from a fixed domain");
  return GroupoidSplitExtension::make(restrict_to_base(e, b_tilde(e)));
}

GroupoidSplitExtension groupoid_classifier(const InternalGroupoid &x) {
  RGClassifier cls = rg_classifier(x.graph());
  return largest_groupoid_subextension(cls.ext);
}

VerifyReport grpd_verify_generic(const GroupoidSplitExtension &candidate,
                                 const std::vector<GroupPtr> &catalog,
                                 int max_base, int jobs) {
  const ReflexiveGraph &x = candidate.rg().kernel_graph();
  AutGroup autx = automorphism_group(x.carrier());
  struct Case {
    int catalog_index;
    int structure_index;
    int action_index;
    RGSplitExtension probe;
  };
  std::vector<Case> cases;
  HomCache cache;
  for (int ci = 0; ci < static_cast<int>(catalog.size()); ++ci) {
    const auto &b = catalog[ci];
    if (b->order() > max_base)
      continue;
    cache.get(b, candidate.rg().ext().base());
    auto structures = all_rg_structures(b);
    for (int si = 0; si < static_cast<int>(structures.size()); ++si) {
      if (!is_groupoid(structures[si]))
        continue;
      auto actions = compatible_actions(structures[si], x, autx);
      for (int ai = 0; ai < static_cast<int>(actions.size()); ++ai) {
        RGSplitExtension probe = rg_split_extension(actions[ai]);
        if (!is_groupoid(probe.total_graph()))
          continue;
        cases.push_back(Case{ci, si, ai, std::move(probe)});
      }
    }
  }
  std::vector<int> counts(cases.size(), 0);
  parallel_for(static_cast<long>(cases.size()), jobs, [&](long i) {
    const Case &c = cases[static_cast<size_t>(i)];
    counts[static_cast<size_t>(i)] = count_rg_morphisms(
        c.probe, candidate.rg(),
        cache.get(catalog[c.catalog_index], candidate.rg().ext().base()), 2);
  });
  VerifyReport report;
  report.kernel = display_name(x.carrier());
  report.candidate_order = candidate.rg().ext().total()->order();
  report.cases_checked = static_cast<long>(cases.size());
  for (size_t i = 0; i < cases.size(); ++i) {
    if (counts[i] == 1)
      continue;
    report.failures.push_back(VerifyFailure{
        display_name(catalog[cases[i].catalog_index]),
        cases[i].structure_index, cases[i].action_index,
        counts[i] == 0 ? VerifyFailure::Kind::Missing
                       : VerifyFailure::Kind::NonUnique,
        counts[i]});
  }
  return report;
}

CrossedModule CrossedModule::make(GroupHom boundary, Action act) {
  if (!same_group(act.actor(), boundary.cod()) ||
      !same_group(act.target(), boundary.dom()))
    throw Error(ErrorKind::BadInput,
                "crossed module: action endpoints do not match the boundary");
  const auto &t = boundary.dom();
  const auto &g = boundary.cod();
  for (int a = 0; a < g->order(); ++a)
    for (int tau = 0; tau < t->order(); ++tau)
      if (boundary(act.apply(a, tau)) != g->conj(a, boundary(tau)))
        throw Error(ErrorKind::NotCrossedModule,
                    "equivariance fails at g=" + std::to_string(a) +
                        " tau=" + std::to_string(tau));
  for (int tau = 0; tau < t->order(); ++tau)
    for (int tau2 = 0; tau2 < t->order(); ++tau2)
      if (act.apply(boundary(tau), tau2) != t->conj(tau, tau2))
        throw Error(ErrorKind::NotCrossedModule,
                    "Peiffer identity fails at tau=" + std::to_string(tau) +
                        " tau'=" + std::to_string(tau2));
  return CrossedModule(std::move(boundary), std::move(act));
}

CrossedModule cat1_to_xmod(const InternalGroupoid &x) {
  const ReflexiveGraph &g = x.graph();
  const auto &carrier = g.carrier();
  SubgroupGroup t = as_group(g.star_g());
  SubgroupGroup g0 = as_group(g.objects());
  std::vector<int> dmap(t.group->order());
  for (int tau = 0; tau < t.group->order(); ++tau)
    dmap[tau] = g0.index_of[g.t()(t.inclusion(tau))];
  GroupHom boundary = GroupHom::make(t.group, g0.group, std::move(dmap));
  std::vector<std::vector<int>> perms(
      static_cast<size_t>(g0.group->order()),
      std::vector<int>(t.group->order()));
  for (int a = 0; a < g0.group->order(); ++a)
    for (int tau = 0; tau < t.group->order(); ++tau)
      perms[a][tau] =
          t.index_of[carrier->conj(g0.inclusion(a), t.inclusion(tau))];
  Action act = Action::make(g0.group, t.group, std::move(perms));
  return CrossedModule::make(std::move(boundary), std::move(act));
}

InternalGroupoid xmod_to_cat1(const CrossedModule &m) {
  SplitExtension ext = semidirect_product(m.action());
  const auto &total = ext.total();
  const auto &g = m.g_group();
  const int ng = g->order();
  std::vector<int> smap(total->order()), tmap(total->order());
  for (int i = 0; i < total->order(); ++i) {
    const int tau = i / ng, a = i % ng;
    smap[i] = a;                             // (0, g) sits at index g
    tmap[i] = g->mul(m.boundary()(tau), a);  // (0, boundary(tau) g)
  }
  ReflexiveGraph rg =
      ReflexiveGraph::make(GroupHom::make(total, total, std::move(smap)),
                           GroupHom::make(total, total, std::move(tmap)));
  return InternalGroupoid::make(std::move(rg));
}

bool xmod_isomorphic(const CrossedModule &a, const CrossedModule &b) {
  if (a.t_group()->order() != b.t_group()->order() ||
      a.g_group()->order() != b.g_group()->order())
    return false;
  auto t_isos = all_isomorphisms(a.t_group(), b.t_group());
  auto g_isos = all_isomorphisms(a.g_group(), b.g_group());
  const int nt = a.t_group()->order();
  const int ng = a.g_group()->order();
  for (const auto &it : t_isos) {
    for (const auto &ig : g_isos) {
      bool ok = true;
      for (int tau = 0; tau < nt && ok; ++tau)
        ok = ig[a.boundary()(tau)] == b.boundary()(it[tau]);
      for (int v = 0; v < ng && ok; ++v)
        for (int tau = 0; tau < nt && ok; ++tau)
          ok = it[a.action().apply(v, tau)] == b.action().apply(ig[v], it[tau]);
      if (ok)
        return true;
    }
  }
  return false;
}

} // namespace grpd
