#include "grpd/rgraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "grpd/lattice.hpp"
#include "grpd/parallel.hpp"

namespace grpd {

namespace {

std::string display_name(const GroupPtr &g) {
  if (!g->name().empty())
    return g->name();
  return "group(" + std::to_string(g->order()) + ")";
}

bool maps_commute_with(const std::vector<int> &u, const std::vector<int> &m) {
  // u.m == m.u as maps on the same carrier
  for (size_t x = 0; x < u.size(); ++x)
    if (u[m[x]] != m[u[x]])
      return false;
  return true;
}

} // namespace

ReflexiveGraph ReflexiveGraph::make(GroupHom s, GroupHom t) {
  const auto &g = s.dom();
  if (!same_group(s.dom(), s.cod()) || !same_group(t.dom(), t.cod()) ||
      !same_group(s.dom(), t.dom()))
    throw Error(ErrorKind::BadInput,
                "reflexive graph needs two endomorphisms of one carrier");
  for (int x = 0; x < g->order(); ++x) {
    if (s(t(x)) != t(x))
      throw Error(ErrorKind::RelationViolated,
                  "s(t(x)) != t(x) at x=" + std::to_string(x));
    if (t(s(x)) != s(x))
      throw Error(ErrorKind::RelationViolated,
                  "t(s(x)) != s(x) at x=" + std::to_string(x));
  }
  // Derived facts, re-checked here because everything downstream leans on
  // them: s and t are idempotent and share their image with their fixed
  // points.
  std::vector<int> im_s, im_t, fix_s, fix_t;
  for (int x = 0; x < g->order(); ++x) {
    if (s(s(x)) != s(x) || t(t(x)) != t(x))
      throw Error(ErrorKind::RelationViolated, "structure map not idempotent");
    if (s(x) == x)
      fix_s.push_back(x);
    if (t(x) == x)
      fix_t.push_back(x);
    im_s.push_back(s(x));
    im_t.push_back(t(x));
  }
  std::sort(im_s.begin(), im_s.end());
  im_s.erase(std::unique(im_s.begin(), im_s.end()), im_s.end());
  std::sort(im_t.begin(), im_t.end());
  im_t.erase(std::unique(im_t.begin(), im_t.end()), im_t.end());
  if (im_s != fix_s || im_t != fix_t || im_s != im_t)
    throw Error(ErrorKind::RelationViolated,
                "images and fixed points of s and t do not coincide");
  Subgroup ker_s = kernel(s);
  Subgroup ker_t = kernel(t);
  Subgroup objects = Subgroup::make(g, im_s);
  return ReflexiveGraph(std::move(s), std::move(t), std::move(ker_s),
                        std::move(ker_t), std::move(objects));
}

bool ReflexiveGraph::operator==(const ReflexiveGraph &other) const {
  return same_group(carrier(), other.carrier()) &&
         s_.map() == other.s_.map() && t_.map() == other.t_.map();
}

ReflexiveGraph discrete(const GroupPtr &g) {
  return ReflexiveGraph::make(GroupHom::identity(g), GroupHom::identity(g));
}

RGParts rg_parts(const ReflexiveGraph &g) {
  return RGParts{g.star_g(), g.g_star(), g.objects()};
}

RGSubgraph RGSubgraph::make(ReflexiveGraph ambient, Subgroup elements) {
  if (!same_group(ambient.carrier(), elements.parent()))
    throw Error(ErrorKind::BadInput, "subgraph lives in a different carrier");
  for (int x : elements.elements()) {
    if (!elements.contains(ambient.s()(x)) ||
        !elements.contains(ambient.t()(x)))
      throw Error(ErrorKind::BadInput,
                  "subgroup is not closed under the structure maps");
  }
  return RGSubgraph(std::move(ambient), std::move(elements));
}

bool is_compatible(const Action &act, const ReflexiveGraph &kernel_graph,
                   const ReflexiveGraph &base_graph) {
  if (!same_group(act.target(), kernel_graph.carrier()) ||
      !same_group(act.actor(), base_graph.carrier()))
    return false;
  const auto &sx = kernel_graph.s();
  const auto &tx = kernel_graph.t();
  const auto &sb = base_graph.s();
  const auto &tb = base_graph.t();
  for (int b = 0; b < act.actor()->order(); ++b) {
    for (int x = 0; x < act.target()->order(); ++x) {
      if (sx(act.apply(b, x)) != act.apply(sb(b), sx(x)))
        return false;
      if (tx(act.apply(b, x)) != act.apply(tb(b), tx(x)))
        return false;
    }
  }
  return true;
}

CompatibleAction CompatibleAction::make(Action act, ReflexiveGraph kernel_graph,
                                        ReflexiveGraph base_graph) {
  if (!same_group(act.target(), kernel_graph.carrier()) ||
      !same_group(act.actor(), base_graph.carrier()))
    throw Error(ErrorKind::BadInput, "action endpoints do not match graphs");
  if (!is_compatible(act, kernel_graph, base_graph))
    throw Error(ErrorKind::IncompatibleAction,
                "action does not intertwine the structure maps");
  return CompatibleAction(std::move(act), std::move(kernel_graph),
                          std::move(base_graph));
}

RGSplitExtension RGSplitExtension::make(SplitExtension ext,
                                        ReflexiveGraph kernel_graph,
                                        ReflexiveGraph total_graph,
                                        ReflexiveGraph base_graph) {
  if (!same_group(ext.kernel_group(), kernel_graph.carrier()) ||
      !same_group(ext.total(), total_graph.carrier()) ||
      !same_group(ext.base(), base_graph.carrier()))
    throw Error(ErrorKind::BadInput, "graphs do not match the extension");
  auto equivariant = [](const GroupHom &f, const ReflexiveGraph &src,
                        const ReflexiveGraph &dst) {
    for (int x = 0; x < f.dom()->order(); ++x)
      if (f(src.s()(x)) != dst.s()(f(x)) || f(src.t()(x)) != dst.t()(f(x)))
        return false;
    return true;
  };
  if (!equivariant(ext.kappa(), kernel_graph, total_graph))
    throw Error(ErrorKind::BadInput, "kappa is not a graph morphism");
  if (!equivariant(ext.alpha(), total_graph, base_graph))
    throw Error(ErrorKind::BadInput, "alpha is not a graph morphism");
  if (!equivariant(ext.beta(), base_graph, total_graph))
    throw Error(ErrorKind::BadInput, "beta is not a graph morphism");
  return RGSplitExtension(std::move(ext), std::move(kernel_graph),
                          std::move(total_graph), std::move(base_graph));
}

CompatibleAction RGSplitExtension::action() const {
  return CompatibleAction::make(ext_.action(), kernel_, base_);
}

RGSplitExtension rg_split_extension(const CompatibleAction &ca) {
  SplitExtension ext = semidirect_product(ca.action());
  const auto &total = ext.total();
  const int nb = ca.base_graph().carrier()->order();
  const auto &sx = ca.kernel_graph().s();
  const auto &tx = ca.kernel_graph().t();
  const auto &sb = ca.base_graph().s();
  const auto &tb = ca.base_graph().t();
  std::vector<int> smap(total->order()), tmap(total->order());
  for (int i = 0; i < total->order(); ++i) {
    const int x = i / nb, b = i % nb;
    smap[i] = sx(x) * nb + sb(b);
    tmap[i] = tx(x) * nb + tb(b);
  }
  ReflexiveGraph total_graph =
      ReflexiveGraph::make(GroupHom::make(total, total, std::move(smap)),
                           GroupHom::make(total, total, std::move(tmap)));
  return RGSplitExtension::make(std::move(ext), ca.kernel_graph(),
                                std::move(total_graph), ca.base_graph());
}

RGClassifier rg_classifier(const ReflexiveGraph &x) {
  const auto &xc = x.carrier();
  AutGroup aut = automorphism_group(xc);
  const int m = aut.group->order();
  const std::vector<int> &smap = x.s().map();
  const std::vector<int> &tmap = x.t().map();

  // Automorphisms commuting with both structure maps; candidates for the
  // g and h slots.
  std::vector<int> c_st;
  for (int u = 0; u < m; ++u)
    if (maps_commute_with(aut.autos[u], smap) &&
        maps_commute_with(aut.autos[u], tmap))
      c_st.push_back(u);

  std::vector<std::array<int, 3>> triples;
  const int nx = xc->order();
  for (int f = 0; f < m; ++f) {
    std::vector<int> gs, hs;
    for (int u : c_st) {
      bool ok_g = true, ok_h = true;
      for (int e = 0; e < nx; ++e) {
        if (aut.autos[u][smap[e]] != smap[aut.autos[f][e]])
          ok_g = false;
        if (aut.autos[u][tmap[e]] != tmap[aut.autos[f][e]])
          ok_h = false;
        if (!ok_g && !ok_h)
          break;
      }
      if (ok_g)
        gs.push_back(u);
      if (ok_h)
        hs.push_back(u);
    }
    for (int g : gs)
      for (int h : hs)
        triples.push_back({f, g, h});
  }

  const int k = static_cast<int>(triples.size());
  std::map<std::array<int, 3>, int> index;
  for (int i = 0; i < k; ++i)
    index[triples[i]] = i;
  std::vector<int> table(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      std::array<int, 3> prod = {
          aut.group->mul(triples[i][0], triples[j][0]),
          aut.group->mul(triples[i][1], triples[j][1]),
          aut.group->mul(triples[i][2], triples[j][2])};
      auto it = index.find(prod);
      if (it == index.end())
        throw Error(ErrorKind::BadInput,
                    "classifier triples are not closed under composition");
      table[static_cast<size_t>(i) * k + j] = it->second;
    }
  }
  std::string name = "[" + display_name(xc) + "]";
  GroupPtr bc = FiniteGroup::make(k, std::move(table), std::move(name));

  std::vector<int> s_of(k), t_of(k);
  for (int i = 0; i < k; ++i) {
    const int g = triples[i][1], h = triples[i][2];
    auto its = index.find({g, g, g});
    auto itt = index.find({h, h, h});
    if (its == index.end() || itt == index.end())
      throw Error(ErrorKind::BadInput,
                  "classifier structure maps leave the triple group");
    s_of[i] = its->second;
    t_of[i] = itt->second;
  }
  ReflexiveGraph base =
      ReflexiveGraph::make(GroupHom::make(bc, bc, std::move(s_of)),
                           GroupHom::make(bc, bc, std::move(t_of)));

  std::vector<std::vector<int>> assignment;
  assignment.reserve(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i)
    assignment.push_back(aut.autos[triples[i][0]]);
  CompatibleAction ca = CompatibleAction::make(
      Action::make(bc, xc, std::move(assignment)), x, base);
  RGSplitExtension ext = rg_split_extension(ca);
  return RGClassifier{std::move(aut), std::move(triples), std::move(base),
                      std::move(ca), std::move(ext)};
}

RGSubgraph rg_centralizer(const RGSubgraph &s) {
  const ReflexiveGraph &g = s.ambient();
  Subgroup z = centralizer(s.subgroup());
  Subgroup result =
      meet(meet(z, preimage(g.s(), z)), preimage(g.t(), z));
  return RGSubgraph::make(g, std::move(result));
}

bool rg_is_faithful(const RGSplitExtension &e) {
  const ReflexiveGraph &a = e.total_graph();
  Subgroup z = centralizer(e.ext().kappa());
  Subgroup core = meet(meet(z, preimage(a.s(), z)), preimage(a.t(), z));
  return meet(core, image(e.ext().beta())).is_trivial();
}

std::vector<ReflexiveGraph> all_rg_structures(const GroupPtr &g) {
  std::vector<std::vector<int>> endos = all_homs(g, g);
  std::vector<ReflexiveGraph> out;
  for (const auto &s : endos) {
    for (const auto &t : endos) {
      bool ok = true;
      for (int x = 0; x < g->order() && ok; ++x)
        ok = s[t[x]] == t[x] && t[s[x]] == s[x];
      if (ok)
        out.push_back(ReflexiveGraph::make(GroupHom::make(g, g, s),
                                           GroupHom::make(g, g, t)));
    }
  }
  return out;
}

std::vector<CompatibleAction> compatible_actions(const ReflexiveGraph &base,
                                                 const ReflexiveGraph &x,
                                                 const AutGroup &autx) {
  std::vector<CompatibleAction> out;
  for (auto &act : all_actions(base.carrier(), autx))
    if (is_compatible(act, x, base))
      out.push_back(CompatibleAction::make(std::move(act), x, base));
  return out;
}

namespace {

bool base_map_equivariant(const std::vector<int> &w, const ReflexiveGraph &src,
                          const ReflexiveGraph &dst) {
  for (size_t b = 0; b < w.size(); ++b) {
    if (w[src.s()(static_cast<int>(b))] != dst.s()(w[b]))
      return false;
    if (w[src.t()(static_cast<int>(b))] != dst.t()(w[b]))
      return false;
  }
  return true;
}

void require_same_kernel_graph(const RGSplitExtension &e,
                               const RGSplitExtension &target) {
  if (e.kernel_graph() != target.kernel_graph())
    throw Error(ErrorKind::KernelMismatch,
                "cannot compare extensions of different kernel graphs");
}

} // namespace

std::vector<SplitExtMorphism>
rg_morphisms_between(const RGSplitExtension &e,
                     const RGSplitExtension &target) {
  require_same_kernel_graph(e, target);
  std::vector<SplitExtMorphism> out;
  for (auto &mor : morphisms_between(e.ext(), target.ext()))
    if (base_map_equivariant(mor.w.map(), e.base_graph(), target.base_graph()))
      out.push_back(std::move(mor));
  return out;
}

int count_rg_morphisms(const RGSplitExtension &e,
                       const RGSplitExtension &target,
                       const std::vector<std::vector<int>> &base_maps,
                       int cap) {
  int count = 0;
  for (const auto &w : base_maps) {
    if (!base_map_equivariant(w, e.base_graph(), target.base_graph()))
      continue;
    if (induced_total_map(e.ext(), target.ext(), w)) {
      if (++count >= cap)
        return count;
    }
  }
  return count;
}

VerifyReport rg_verify_generic(const RGSplitExtension &candidate,
                               const std::vector<GroupPtr> &catalog,
                               int max_base, int jobs) {
  const ReflexiveGraph &x = candidate.kernel_graph();
  AutGroup autx = automorphism_group(x.carrier());
  struct Case {
    int catalog_index;
    int structure_index;
    int action_index;
    CompatibleAction act;
  };
  std::vector<Case> cases;
  HomCache cache;
  for (int ci = 0; ci < static_cast<int>(catalog.size()); ++ci) {
    const auto &b = catalog[ci];
    if (b->order() > max_base)
      continue;
    cache.get(b, candidate.ext().base());
    auto structures = all_rg_structures(b);
    for (int si = 0; si < static_cast<int>(structures.size()); ++si) {
      auto actions = compatible_actions(structures[si], x, autx);
      for (int ai = 0; ai < static_cast<int>(actions.size()); ++ai)
        cases.push_back(Case{ci, si, ai, actions[ai]});
    }
  }
  std::vector<int> counts(cases.size(), 0);
  parallel_for(static_cast<long>(cases.size()), jobs, [&](long i) {
    const Case &c = cases[static_cast<size_t>(i)];
    RGSplitExtension probe = rg_split_extension(c.act);
    counts[static_cast<size_t>(i)] = count_rg_morphisms(
        probe, candidate,
        cache.get(catalog[c.catalog_index], candidate.ext().base()), 2);
  });
  VerifyReport report;
  report.kernel = display_name(x.carrier());
  report.candidate_order = candidate.ext().total()->order();
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

bool rg_isomorphic(const ReflexiveGraph &a, const ReflexiveGraph &b) {
  if (a.carrier()->order() != b.carrier()->order())
    return false;
  for (const auto &m : all_isomorphisms(a.carrier(), b.carrier())) {
    bool ok = true;
    for (int e = 0; e < a.carrier()->order() && ok; ++e)
      ok = m[a.s()(e)] == b.s()(m[e]) && m[a.t()(e)] == b.t()(m[e]);
    if (ok)
      return true;
  }
  return false;
}

std::vector<RGSubgraph> sub_reflexive_graphs(const ReflexiveGraph &g) {
  std::vector<RGSubgraph> out;
  for (auto &sub : all_subgroups(g.carrier())) {
    bool closed = true;
    for (int e : sub.elements()) {
      if (!sub.contains(g.s()(e)) || !sub.contains(g.t()(e))) {
        closed = false;
        break;
      }
    }
    if (closed)
      out.push_back(RGSubgraph::make(g, std::move(sub)));
  }
  return out;
}

RGSplitExtension restrict_to_base(const RGSplitExtension &e,
                                  const RGSubgraph &base_part) {
  if (base_part.ambient() != e.base_graph())
    throw Error(ErrorKind::BadInput,
                "subgraph does not live in the extension's base");
  const SplitExtension &ext = e.ext();
  const Subgroup &bsub = base_part.subgroup();
  Subgroup asub = preimage(ext.alpha(), bsub);
  SubgroupGroup at = as_group(asub);
  SubgroupGroup bt = as_group(bsub);

  auto restrict_endo = [](const SubgroupGroup &sg, const GroupHom &f) {
    std::vector<int> map(sg.group->order());
    for (int i = 0; i < sg.group->order(); ++i)
      map[i] = sg.index_of[f(sg.inclusion(i))];
    return GroupHom::make(sg.group, sg.group, std::move(map));
  };

  std::vector<int> kmap(ext.kernel_group()->order());
  for (int x = 0; x < ext.kernel_group()->order(); ++x)
    kmap[x] = at.index_of[ext.kappa()(x)];
  std::vector<int> amap(at.group->order());
  for (int i = 0; i < at.group->order(); ++i)
    amap[i] = bt.index_of[ext.alpha()(at.inclusion(i))];
  std::vector<int> bmap(bt.group->order());
  for (int i = 0; i < bt.group->order(); ++i)
    bmap[i] = at.index_of[ext.beta()(bt.inclusion(i))];

  SplitExtension restricted = SplitExtension::make(
      GroupHom::make(ext.kernel_group(), at.group, std::move(kmap)),
      GroupHom::make(at.group, bt.group, std::move(amap)),
      GroupHom::make(bt.group, at.group, std::move(bmap)));
  ReflexiveGraph total_graph =
      ReflexiveGraph::make(restrict_endo(at, e.total_graph().s()),
                           restrict_endo(at, e.total_graph().t()));
  ReflexiveGraph base_graph =
      ReflexiveGraph::make(restrict_endo(bt, e.base_graph().s()),
                           restrict_endo(bt, e.base_graph().t()));
  return RGSplitExtension::make(std::move(restricted), e.kernel_graph(),
                                std::move(total_graph), std::move(base_graph));
}

} // namespace grpd
