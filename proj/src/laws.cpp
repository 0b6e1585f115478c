#include "grpd/laws.hpp"

#include <optional>
#include <sstream>

#include "grpd/lattice.hpp"
#include "grpd/parallel.hpp"

namespace grpd {

namespace {

constexpr int kLiftKernelCap = 6;
constexpr int kLiftBaseCap = 8;
constexpr int kRgCarrierCap = 6;

std::string display_name(const GroupPtr &g) {
  if (!g->name().empty())
    return g->name();
  return "group(" + std::to_string(g->order()) + ")";
}

std::string set_string(const Subgroup &s) {
  std::ostringstream out;
  out << '{';
  for (size_t i = 0; i < s.elements().size(); ++i) {
    if (i)
      out << ',';
    out << s.elements()[i];
  }
  out << '}';
  return out.str();
}

} // namespace

bool check_jacobi(const GroupPtr &g, const Subgroup &k, const Subgroup &l,
                  const Subgroup &m) {
  for (const Subgroup *s : {&k, &l, &m})
    if (!s->is_normal())
      throw Error(ErrorKind::NotNormal,
                  "jacobi requires normal subgroups, got " + set_string(*s) +
                      " in " + display_name(g));
  Subgroup lhs = huq_commutator(k, huq_commutator(l, m));
  Subgroup rhs = join(huq_commutator(huq_commutator(k, l), m),
                      huq_commutator(huq_commutator(m, k), l));
  return lhs.subset_of(rhs);
}

bool check_join_distributivity(const GroupPtr &, const Subgroup &a1,
                               const Subgroup &a2, const Subgroup &b) {
  Subgroup lhs = huq_commutator(join(a1, a2), b);
  Subgroup rhs = join(huq_commutator(a1, b), huq_commutator(a2, b));
  return lhs == rhs;
}

bool check_lift(const SplitExtension &e, const Subgroup &k) {
  Subgroup kk = image_of(e.kappa(), k);
  if (!kk.is_normal())
    throw Error(ErrorKind::NotNormalInTotal,
                "kappa(K) = " + set_string(kk) +
                    " is not normal in the total group");
  Subgroup j = join(kk, image(e.beta()));
  if (!(meet(j, image(e.kappa())) == kk))
    return false;
  SubgroupGroup kg = as_group(k);
  SubgroupGroup jg = as_group(j);
  std::vector<int> kmap(kg.group->order());
  for (int i = 0; i < kg.group->order(); ++i)
    kmap[i] = jg.index_of[e.kappa()(kg.inclusion(i))];
  std::vector<int> amap(jg.group->order());
  for (int i = 0; i < jg.group->order(); ++i)
    amap[i] = e.alpha()(jg.inclusion(i));
  std::vector<int> bmap(e.base()->order());
  for (int b = 0; b < e.base()->order(); ++b)
    bmap[b] = jg.index_of[e.beta()(b)];
  try {
    SplitExtension::make(
        GroupHom::make(kg.group, jg.group, std::move(kmap)),
        GroupHom::make(jg.group, e.base(), std::move(amap)),
        GroupHom::make(e.base(), jg.group, std::move(bmap)));
  } catch (const Error &) {
    return false;
  }
  return true;
}

bool mixed_commutators_vanish(const RGSplitExtension &e) {
  const GroupHom &kappa = e.ext().kappa();
  const GroupHom &beta = e.ext().beta();
  Subgroup star_b = image_of(beta, e.base_graph().star_g());
  Subgroup b_star = image_of(beta, e.base_graph().g_star());
  Subgroup star_x = image_of(kappa, e.kernel_graph().star_g());
  Subgroup x_star = image_of(kappa, e.kernel_graph().g_star());
  return huq_commutator(star_b, x_star).is_trivial() &&
         huq_commutator(b_star, star_x).is_trivial();
}

bool check_kernel_commutator_lemma(const RGSplitExtension &e) {
  Subgroup inner =
      huq_commutator(e.total_graph().g_star(), e.total_graph().star_g());
  return huq_commutator(image(e.ext().kappa()), inner).is_trivial();
}

bool check_extension_closed(const RGSplitExtension &e) {
  return is_groupoid(e.total_graph());
}

bool check_faithful_codomain_groupoid(const RGSplitExtension &e) {
  if (!rg_is_faithful(e))
    throw Error(ErrorKind::NotFaithful, "the extension is not faithful");
  const GroupHom &beta = e.ext().beta();
  Subgroup inner = huq_commutator(image_of(beta, e.base_graph().g_star()),
                                  image_of(beta, e.base_graph().star_g()));
  bool commutator_side =
      huq_commutator(image(e.ext().kappa()), inner).is_trivial();
  return is_groupoid(e.base_graph()) == commutator_side;
}

namespace {

// One law sweep: pre-built cases checked in parallel, slot-indexed results
// merged in order.
struct Sweep {
  LawReport report;
  std::vector<LawWitness> slots;
  std::vector<char> failed;

  explicit Sweep(std::string law) { report.law = std::move(law); }

  template <typename Check>
  void run(long count, int jobs, Check &&check) {
    slots.resize(static_cast<size_t>(count));
    failed.assign(static_cast<size_t>(count), 0);
    parallel_for(count, jobs, [&](long i) {
      auto witness = check(i);
      if (witness) {
        failed[static_cast<size_t>(i)] = 1;
        slots[static_cast<size_t>(i)] = std::move(*witness);
      }
    });
    report.cases_checked = count;
    for (long i = 0; i < count; ++i)
      if (failed[static_cast<size_t>(i)])
        report.failures.push_back(std::move(slots[static_cast<size_t>(i)]));
    slots.clear();
    failed.clear();
  }
};

struct TripleCase {
  int group;
  int a, b, c;
};

LawReport run_triple_law(const std::string &law,
                         const std::vector<GroupPtr> &catalog, int jobs,
                         bool normal_only) {
  std::vector<std::vector<Subgroup>> subs(catalog.size());
  std::vector<TripleCase> cases;
  for (size_t gi = 0; gi < catalog.size(); ++gi) {
    subs[gi] = normal_only ? normal_subgroups(catalog[gi])
                           : all_subgroups(catalog[gi]);
    const int n = static_cast<int>(subs[gi].size());
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          cases.push_back(TripleCase{static_cast<int>(gi), a, b, c});
  }
  Sweep sweep(law);
  sweep.run(static_cast<long>(cases.size()), jobs,
            [&](long i) -> std::optional<LawWitness> {
              const TripleCase &t = cases[static_cast<size_t>(i)];
              const auto &g = catalog[static_cast<size_t>(t.group)];
              const auto &s = subs[static_cast<size_t>(t.group)];
              bool ok = normal_only
                            ? check_jacobi(g, s[t.a], s[t.b], s[t.c])
                            : check_join_distributivity(g, s[t.a], s[t.b],
                                                        s[t.c]);
              if (ok)
                return std::nullopt;
              return LawWitness{display_name(g),
                               set_string(s[t.a]) + " " + set_string(s[t.b]) +
                                   " " + set_string(s[t.c])};
            });
  return sweep.report;
}

LawReport run_lift_law(const std::vector<GroupPtr> &catalog, int jobs) {
  struct LiftCase {
    int kernel, base;
    int action;
    SplitExtension ext;
    Subgroup k;
  };
  std::vector<LiftCase> cases;
  long vacuous = 0;
  for (size_t xi = 0; xi < catalog.size(); ++xi) {
    const auto &x = catalog[xi];
    if (x->order() > kLiftKernelCap)
      continue;
    auto subs_x = all_subgroups(x);
    AutGroup autx = automorphism_group(x);
    for (size_t bi = 0; bi < catalog.size(); ++bi) {
      const auto &b = catalog[bi];
      if (b->order() > kLiftBaseCap)
        continue;
      auto actions = all_actions(b, autx);
      for (size_t ai = 0; ai < actions.size(); ++ai) {
        SplitExtension e = semidirect_product(actions[ai]);
        for (const Subgroup &k : subs_x) {
          if (!image_of(e.kappa(), k).is_normal()) {
            ++vacuous;
            continue;
          }
          cases.push_back(LiftCase{static_cast<int>(xi), static_cast<int>(bi),
                                   static_cast<int>(ai), e, k});
        }
      }
    }
  }
  Sweep sweep("lift");
  sweep.run(static_cast<long>(cases.size()), jobs,
            [&](long i) -> std::optional<LawWitness> {
              const LiftCase &c = cases[static_cast<size_t>(i)];
              if (check_lift(c.ext, c.k))
                return std::nullopt;
              return LawWitness{
                  display_name(catalog[static_cast<size_t>(c.kernel)]) +
                      " over " +
                      display_name(catalog[static_cast<size_t>(c.base)]),
                  "action " + std::to_string(c.action) + " K=" +
                      set_string(c.k)};
            });
  sweep.report.vacuous = vacuous;
  return sweep.report;
}

struct RGCase {
  int kernel, kernel_structure;
  int base, base_structure;
  int action;
  RGSplitExtension ext;
};

std::vector<RGCase> build_rg_cases(const std::vector<GroupPtr> &catalog) {
  std::vector<RGCase> cases;
  for (size_t xi = 0; xi < catalog.size(); ++xi) {
    const auto &x = catalog[xi];
    if (x->order() > kRgCarrierCap)
      continue;
    auto xstructs = all_rg_structures(x);
    AutGroup autx = automorphism_group(x);
    for (size_t xs = 0; xs < xstructs.size(); ++xs) {
      for (size_t bi = 0; bi < catalog.size(); ++bi) {
        const auto &b = catalog[bi];
        if (b->order() > kRgCarrierCap)
          continue;
        auto bstructs = all_rg_structures(b);
        for (size_t bs = 0; bs < bstructs.size(); ++bs) {
          auto actions = compatible_actions(bstructs[bs], xstructs[xs], autx);
          for (size_t ai = 0; ai < actions.size(); ++ai)
            cases.push_back(RGCase{static_cast<int>(xi), static_cast<int>(xs),
                                   static_cast<int>(bi), static_cast<int>(bs),
                                   static_cast<int>(ai),
                                   rg_split_extension(actions[ai])});
        }
      }
    }
  }
  return cases;
}

std::string rg_case_label(const std::vector<GroupPtr> &catalog,
                          const RGCase &c) {
  return display_name(catalog[static_cast<size_t>(c.kernel)]) + "#" +
         std::to_string(c.kernel_structure) + " over " +
         display_name(catalog[static_cast<size_t>(c.base)]) + "#" +
         std::to_string(c.base_structure);
}

// Shared driver for the hypothesis-gated reflexive graph laws: cases whose
// hypotheses fail count as vacuous rather than failing.
template <typename Hypo, typename Check>
LawReport run_rg_law(const std::string &law,
                     const std::vector<GroupPtr> &catalog, int jobs,
                     Hypo &&hypothesis, Check &&check) {
  auto all_cases = build_rg_cases(catalog);
  std::vector<RGCase> cases;
  long vacuous = 0;
  for (auto &c : all_cases) {
    if (hypothesis(c.ext))
      cases.push_back(std::move(c));
    else
      ++vacuous;
  }
  Sweep sweep(law);
  sweep.run(static_cast<long>(cases.size()), jobs,
            [&](long i) -> std::optional<LawWitness> {
              const RGCase &c = cases[static_cast<size_t>(i)];
              if (check(c.ext))
                return std::nullopt;
              return LawWitness{rg_case_label(catalog, c),
                               "action " + std::to_string(c.action)};
            });
  sweep.report.vacuous = vacuous;
  return sweep.report;
}

} // namespace

std::vector<std::string> law_names() {
  return {"jacobi",            "join-distributivity", "lift",
          "kernel-commutator", "extension-closed",    "faithful-codomain"};
}

LawReport run_law(const std::string &law, const std::vector<GroupPtr> &catalog,
                  int jobs) {
  if (law == "jacobi")
    return run_triple_law(law, catalog, jobs, true);
  if (law == "join-distributivity")
    return run_triple_law(law, catalog, jobs, false);
  if (law == "lift")
    return run_lift_law(catalog, jobs);
  if (law == "kernel-commutator")
    return run_rg_law(law, catalog, jobs,
                      [](const RGSplitExtension &e) {
                        return is_groupoid(e.kernel_graph()) &&
                               mixed_commutators_vanish(e);
                      },
                      check_kernel_commutator_lemma);
  if (law == "extension-closed")
    return run_rg_law(law, catalog, jobs,
                      [](const RGSplitExtension &e) {
                        return is_groupoid(e.kernel_graph()) &&
                               is_groupoid(e.base_graph()) &&
                               mixed_commutators_vanish(e);
                      },
                      check_extension_closed);
  if (law == "faithful-codomain")
    return run_rg_law(law, catalog, jobs, rg_is_faithful,
                      check_faithful_codomain_groupoid);
  throw Error(ErrorKind::BadInput, "unknown law: " + law);
}

std::vector<LawReport> run_laws(const std::string &law_or_all,
                                const std::vector<GroupPtr> &catalog,
                                int jobs) {
  std::vector<LawReport> out;
  if (law_or_all.empty() || law_or_all == "all") {
    for (const auto &name : law_names())
      out.push_back(run_law(name, catalog, jobs));
  } else {
    out.push_back(run_law(law_or_all, catalog, jobs));
  }
  return out;
}

} // namespace grpd
