#include "grpd/splitext.hpp"

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

} // namespace

SplitExtension SplitExtension::make(GroupHom kappa, GroupHom alpha,
                                    GroupHom beta) {
  if (!same_group(kappa.cod(), alpha.dom()))
    throw Error(ErrorKind::BadInput,
                "split extension: kappa does not land in the total group");
  if (!same_group(alpha.cod(), beta.dom()) ||
      !same_group(beta.cod(), alpha.dom()))
    throw Error(ErrorKind::BadInput,
                "split extension: beta does not section alpha's codomain");
  const auto &total = alpha.dom();
  const auto &base = alpha.cod();
  for (int b = 0; b < base->order(); ++b)
    if (alpha(beta(b)) != b)
      throw Error(ErrorKind::SectionNotSplit,
                  "alpha(beta(" + std::to_string(b) + ")) = " +
                      std::to_string(alpha(beta(b))));
  if (!kappa.is_injective())
    throw Error(ErrorKind::KernelMismatch, "kappa is not injective");
  std::vector<int> preimage_in_x(total->order(), -1);
  for (int x = 0; x < kappa.dom()->order(); ++x) {
    if (alpha(kappa(x)) != 0)
      throw Error(ErrorKind::KernelMismatch,
                  "image of kappa is not killed by alpha");
    preimage_in_x[kappa(x)] = x;
  }
  int ker_size = 0;
  for (int a = 0; a < total->order(); ++a)
    if (alpha(a) == 0)
      ++ker_size;
  if (ker_size != kappa.dom()->order())
    throw Error(ErrorKind::KernelMismatch,
                "kernel of alpha has order " + std::to_string(ker_size) +
                    ", kappa provides " +
                    std::to_string(kappa.dom()->order()));
  // a = kappa(x) beta(alpha(a)) with x = kappa^-1(a beta(alpha(a))^-1);
  // well-defined since image(kappa) = kernel(alpha).
  std::vector<int> kernel_part(total->order());
  for (int a = 0; a < total->order(); ++a) {
    int k = total->mul(a, total->inv(beta(alpha(a))));
    kernel_part[a] = preimage_in_x[k];
  }
  return SplitExtension(std::move(kappa), std::move(alpha), std::move(beta),
                        std::move(kernel_part));
}

Action SplitExtension::action() const {
  const auto &x = kernel_group();
  const auto &b = base();
  const auto &a = total();
  std::vector<std::vector<int>> assignment(b->order(),
                                           std::vector<int>(x->order()));
  for (int g = 0; g < b->order(); ++g) {
    const int bg = beta_(g);
    for (int e = 0; e < x->order(); ++e)
      assignment[g][e] = kernel_part_[a->conj(bg, kappa_(e))];
  }
  return Action::make(b, x, std::move(assignment));
}

SplitExtension semidirect_product(const Action &act) {
  const auto &x = act.target();
  const auto &b = act.actor();
  const int nx = x->order(), nb = b->order();
  const int n = nx * nb;
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    const int xi = i / nb, bi = i % nb;
    for (int j = 0; j < n; ++j) {
      const int xj = j / nb, bj = j % nb;
      table[static_cast<size_t>(i) * n + j] =
          x->mul(xi, act.apply(bi, xj)) * nb + b->mul(bi, bj);
    }
  }
  std::string name;
  if (!x->name().empty() && !b->name().empty())
    name = x->name() + ":" + b->name();
  GroupPtr total = FiniteGroup::make(n, std::move(table), std::move(name));
  std::vector<int> kmap(nx), amap(n), bmap(nb);
  for (int e = 0; e < nx; ++e)
    kmap[e] = e * nb;
  for (int i = 0; i < n; ++i)
    amap[i] = i % nb;
  for (int g = 0; g < nb; ++g)
    bmap[g] = g;
  return SplitExtension::make(GroupHom::make(x, total, std::move(kmap)),
                              GroupHom::make(total, b, std::move(amap)),
                              GroupHom::make(b, total, std::move(bmap)));
}

SplitExtension generic_split_extension(const GroupPtr &x) {
  return semidirect_product(evaluation_action(automorphism_group(x)));
}

SplitExtMorphism SplitExtMorphism::make(const SplitExtension &src,
                                        const SplitExtension &dst, GroupHom v,
                                        GroupHom w) {
  if (!same_group(src.kernel_group(), dst.kernel_group()))
    throw Error(ErrorKind::KernelMismatch,
                "morphism endpoints have different kernels");
  if (!same_group(v.dom(), src.total()) || !same_group(v.cod(), dst.total()) ||
      !same_group(w.dom(), src.base()) || !same_group(w.cod(), dst.base()))
    throw Error(ErrorKind::BadInput, "morphism maps have wrong endpoints");
  for (int e = 0; e < src.kernel_group()->order(); ++e)
    if (v(src.kappa()(e)) != dst.kappa()(e))
      throw Error(ErrorKind::BadInput, "morphism does not fix the kernel");
  for (int a = 0; a < src.total()->order(); ++a)
    if (dst.alpha()(v(a)) != w(src.alpha()(a)))
      throw Error(ErrorKind::BadInput, "morphism breaks the alpha square");
  for (int b = 0; b < src.base()->order(); ++b)
    if (v(src.beta()(b)) != dst.beta()(w(b)))
      throw Error(ErrorKind::BadInput, "morphism breaks the beta square");
  return SplitExtMorphism{src, dst, std::move(v), std::move(w)};
}

std::optional<std::vector<int>> induced_total_map(const SplitExtension &e,
                                                  const SplitExtension &target,
                                                  const std::vector<int> &w) {
  const auto &a = e.total();
  std::vector<int> v(a->order());
  for (int i = 0; i < a->order(); ++i)
    v[i] = target.compose_parts(e.kernel_part(i), w[e.base_part(i)]);
  if (!is_hom_map(*a, *target.total(), v))
    return std::nullopt;
  return v;
}

std::vector<SplitExtMorphism> morphisms_between(const SplitExtension &e,
                                                const SplitExtension &target) {
  if (!same_group(e.kernel_group(), target.kernel_group()))
    throw Error(ErrorKind::KernelMismatch,
                "cannot compare extensions of different kernels");
  std::vector<SplitExtMorphism> out;
  for (const auto &w : all_homs(e.base(), target.base())) {
    auto v = induced_total_map(e, target, w);
    if (!v)
      continue;
    out.push_back(SplitExtMorphism::make(
        e, target, GroupHom::make(e.total(), target.total(), std::move(*v)),
        GroupHom::make(e.base(), target.base(), w)));
  }
  return out;
}

int count_morphisms(const SplitExtension &e, const SplitExtension &target,
                    const std::vector<std::vector<int>> &base_maps, int cap) {
  int count = 0;
  for (const auto &w : base_maps) {
    if (induced_total_map(e, target, w)) {
      if (++count >= cap)
        return count;
    }
  }
  return count;
}

bool is_faithful_criterion(const SplitExtension &e) {
  return meet(centralizer(e.kappa()), image(e.beta())).is_trivial();
}

const std::vector<std::vector<int>> &HomCache::get(const GroupPtr &dom,
                                                   const GroupPtr &cod) {
  auto key = std::make_pair(dom, cod);
  auto it = table_.find(key);
  if (it == table_.end())
    it = table_.emplace(key, all_homs(dom, cod)).first;
  return it->second;
}

std::vector<Action> all_actions(const GroupPtr &base, const AutGroup &autx) {
  std::vector<Action> out;
  for (const auto &h : all_homs(base, autx.group)) {
    std::vector<std::vector<int>> assignment;
    assignment.reserve(h.size());
    for (int b = 0; b < base->order(); ++b)
      assignment.push_back(autx.autos[h[b]]);
    out.push_back(Action::make(base, autx.of, std::move(assignment)));
  }
  return out;
}

std::vector<Action> all_actions(const GroupPtr &base, const GroupPtr &x) {
  return all_actions(base, automorphism_group(x));
}

bool is_faithful_bruteforce(const SplitExtension &e,
                            const std::vector<GroupPtr> &catalog, int max_base,
                            HomCache *cache) {
  HomCache local;
  if (!cache)
    cache = &local;
  AutGroup autx = automorphism_group(e.kernel_group());
  for (const auto &b : catalog) {
    if (b->order() > max_base)
      continue;
    const auto &base_maps = cache->get(b, e.base());
    for (const auto &h : cache->get(b, autx.group)) {
      std::vector<std::vector<int>> assignment;
      assignment.reserve(h.size());
      for (int g = 0; g < b->order(); ++g)
        assignment.push_back(autx.autos[h[g]]);
      SplitExtension probe = semidirect_product(
          Action::make(b, e.kernel_group(), std::move(assignment)));
      if (count_morphisms(probe, e, base_maps, 2) > 1)
        return false;
    }
  }
  return true;
}

VerifyReport verify_generic(const SplitExtension &candidate,
                            const std::vector<GroupPtr> &catalog, int max_base,
                            int jobs) {
  const auto &x = candidate.kernel_group();
  AutGroup autx = automorphism_group(x);
  struct Case {
    int catalog_index;
    int action_index;
    Action act;
  };
  std::vector<Case> cases;
  HomCache cache;
  for (int ci = 0; ci < static_cast<int>(catalog.size()); ++ci) {
    const auto &b = catalog[ci];
    if (b->order() > max_base)
      continue;
    cache.get(b, candidate.base()); // warmed for the parallel phase
    auto actions = all_actions(b, autx);
    for (int ai = 0; ai < static_cast<int>(actions.size()); ++ai)
      cases.push_back(Case{ci, ai, actions[ai]});
  }
  std::vector<int> counts(cases.size(), 0);
  parallel_for(static_cast<long>(cases.size()), jobs, [&](long i) {
    const Case &c = cases[static_cast<size_t>(i)];
    SplitExtension probe = semidirect_product(c.act);
    counts[static_cast<size_t>(i)] = count_morphisms(
        probe, candidate, cache.get(catalog[c.catalog_index], candidate.base()),
        2);
  });
  VerifyReport report;
  report.kernel = display_name(x);
  report.candidate_order = candidate.total()->order();
  report.cases_checked = static_cast<long>(cases.size());
  for (size_t i = 0; i < cases.size(); ++i) {
    if (counts[i] == 1)
      continue;
    report.failures.push_back(VerifyFailure{
        display_name(catalog[cases[i].catalog_index]), -1,
        cases[i].action_index,
        counts[i] == 0 ? VerifyFailure::Kind::Missing
                       : VerifyFailure::Kind::NonUnique,
        counts[i]});
  }
  return report;
}

} // namespace grpd
