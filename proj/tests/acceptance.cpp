// Acceptance gate: one line per criterion, nonzero exit when any fails.
// Each check pits a construction against an independent oracle at desk
// scale, so a pass certifies the universal property itself, not a replay of
// frozen values.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "grpd/catalog.hpp"
#include "grpd/io.hpp"
#include "grpd/lattice.hpp"
#include "grpd/laws.hpp"

using namespace grpd;

namespace {

using Clock = std::chrono::steady_clock;

int failures_total = 0;

void report(int number, const std::string &label, bool pass,
            const std::string &detail, Clock::time_point start,
            long budget_ms) {
  long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                Clock::now() - start)
                .count();
  bool in_budget = budget_ms <= 0 || ms <= budget_ms;
  bool ok = pass && in_budget;
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << " ("
            << label << "): " << detail << " [" << ms << " ms";
  if (budget_ms > 0)
    std::cout << " of " << budget_ms;
  std::cout << "]\n";
  if (!ok)
    ++failures_total;
}

std::vector<GroupPtr> catalog_max(int max_order) {
  std::vector<GroupPtr> out;
  for (const auto &g : bundled_catalog())
    if (g->order() <= max_order)
      out.push_back(g);
  return out;
}

// ---- criterion 1: the commutator is the least normal subgroup whose
// quotient makes the two images commute, across every subgroup pair ----

void criterion_commutator_oracle() {
  auto start = Clock::now();
  long pairs = 0, bad = 0;
  for (const auto &g : catalog_max(12)) {
    auto subs = all_subgroups(g);
    auto normals = normal_subgroups(g);
    for (const auto &a : subs)
      for (const auto &b : subs) {
        ++pairs;
        auto fast = huq_commutator(a, b);
        // elementwise commutators must die exactly in the normal subgroups
        // containing the commutator; the least of them is the commutator
        std::vector<int> comms;
        for (int x : a.elements())
          for (int y : b.elements())
            comms.push_back(g->comm(x, y));
        auto admissible = [&](const Subgroup &d) {
          for (int c : comms)
            if (!d.contains(c))
              return false;
          return true;
        };
        bool fast_admissible = fast.is_normal() && admissible(fast);
        bool fast_least = true, fast_listed = false;
        for (const auto &d : normals) {
          if (d == fast)
            fast_listed = true;
          if (admissible(d) && !fast.subset_of(d))
            fast_least = false;
        }
        if (!(fast_admissible && fast_least && fast_listed))
          ++bad;
      }
  }
  report(1, "commutator least-normal oracle", bad == 0,
         std::to_string(pairs) + " subgroup pairs, " + std::to_string(bad) +
             " disagreements",
         start, 300000);
}

// ---- criterion 2: Aut(X) |x X receives exactly one morphism from every
// split extension with kernel X over catalog bases of order <= 8 ----

void criterion_generic_terminal() {
  auto start = Clock::now();
  auto catalog = bundled_catalog();
  std::vector<GroupPtr> kernels = {
      cyclic(2), cyclic(3), cyclic(4),
      named_product(cyclic(2), cyclic(2), "V4"), cyclic(5), symmetric(3),
      cyclic(6)};
  long cases = 0, bad = 0;
  for (const auto &x : kernels) {
    auto rep = verify_generic(generic_split_extension(x), catalog, 8);
    cases += rep.cases_checked;
    bad += static_cast<long>(rep.failures.size());
  }
  report(2, "generic split extension terminality", bad == 0,
         std::to_string(cases) + " extensions over 7 kernels, " +
             std::to_string(bad) + " failures",
         start, 600000);
}

// ---- criterion 3: the centralizer-meet characterisation of faithfulness
// agrees with brute-force morphism counting on every catalog extension ----

void criterion_faithfulness_agreement() {
  auto start = Clock::now();
  auto catalog = bundled_catalog();
  long cases = 0, disagreements = 0;
  HomCache cache;
  for (const auto &x : catalog_max(6))
    for (const auto &b : catalog_max(8))
      for (const auto &act : all_actions(b, x)) {
        ++cases;
        auto e = semidirect_product(act);
        if (is_faithful_criterion(e) !=
            is_faithful_bruteforce(e, catalog, 8, &cache))
          ++disagreements;
      }
  report(3, "faithfulness criterion vs enumeration", disagreements == 0,
         std::to_string(cases) + " extensions, " +
             std::to_string(disagreements) + " disagreements",
         start, 0);
}

// ---- criterion 4: the reflexive graph classifier receives exactly one
// morphism from every graph extension over bases of order <= 6 ----

void criterion_rg_classifier_terminal() {
  auto start = Clock::now();
  auto catalog = bundled_catalog();
  long kernels = 0, cases = 0, bad = 0;
  for (const auto &g : catalog_max(6))
    for (const auto &x : all_rg_structures(g)) {
      ++kernels;
      auto cls = rg_classifier(x);
      auto rep = rg_verify_generic(cls.ext, catalog, 6);
      cases += rep.cases_checked;
      bad += static_cast<long>(rep.failures.size());
    }
  report(4, "graph classifier terminality", bad == 0,
         std::to_string(kernels) + " kernels, " + std::to_string(cases) +
             " graph extensions, " + std::to_string(bad) + " failures",
         start, 900000);
}

// ---- criterion 5: the restricted base is the largest subgraph carrying a
// groupoid sub-extension, by exhaustive scan of closed subgroups ----

void criterion_largest_subextension() {
  auto start = Clock::now();
  long faithful_cases = 0, bad = 0;
  for (const auto &kg : catalog_max(6))
    for (const auto &x : all_rg_structures(kg)) {
      if (!is_groupoid(x))
        continue;
      auto autx = automorphism_group(x.carrier());
      for (const auto &bg : catalog_max(6))
        for (const auto &base : all_rg_structures(bg))
          for (const auto &ca : compatible_actions(base, x, autx)) {
            auto e = rg_split_extension(ca);
            if (!rg_is_faithful(e))
              continue;
            ++faithful_cases;
            auto bt = b_tilde(e).subgroup();
            auto best = largest_groupoid_subextension(e);
            bool ok =
                best.rg().base_graph().carrier()->order() == bt.size() &&
                is_groupoid(best.rg().total_graph()) &&
                is_groupoid(best.rg().base_graph());
            // every closed subgroup carrying a groupoid restriction must
            // land inside the computed base
            for (const auto &part : sub_reflexive_graphs(base)) {
              auto restricted = restrict_to_base(e, part);
              if (is_groupoid(restricted.total_graph()) &&
                  is_groupoid(restricted.base_graph()))
                ok = ok && part.subgroup().subset_of(bt);
            }
            if (!ok)
              ++bad;
          }
    }
  report(5, "largest groupoid sub-extension maximality", bad == 0,
         std::to_string(faithful_cases) + " faithful cases, " +
             std::to_string(bad) + " violations",
         start, 0);
}

// ---- criterion 6: the groupoid classifier is a faithful groupoid
// extension and terminal over catalog bases of order <= 6 ----

void criterion_groupoid_classifier() {
  auto start = Clock::now();
  auto catalog = bundled_catalog();
  auto one_object = [](const GroupPtr &g) {
    auto z = GroupHom::zero(g, g);
    return ReflexiveGraph::make(z, z);
  };
  auto s3 = symmetric(3);
  std::vector<std::pair<std::string, InternalGroupoid>> kernels;
  kernels.emplace_back("discrete Z2",
                       InternalGroupoid::make(discrete(cyclic(2))));
  kernels.emplace_back("discrete Z3",
                       InternalGroupoid::make(discrete(cyclic(3))));
  kernels.emplace_back("discrete S3", InternalGroupoid::make(discrete(s3)));
  kernels.emplace_back("one-object Z2",
                       InternalGroupoid::make(one_object(cyclic(2))));
  kernels.emplace_back("one-object Z3",
                       InternalGroupoid::make(one_object(cyclic(3))));
  kernels.emplace_back(
      "arrows of A3 in S3",
      xmod_to_cat1(inclusion_xmod(s3, Subgroup::generated(s3, {3}))));

  long cases = 0, bad = 0;
  for (const auto &[label, x] : kernels) {
    auto cls = groupoid_classifier(x);
    bool ok = is_groupoid(cls.rg().total_graph()) &&
              is_groupoid(cls.rg().base_graph()) &&
              is_groupoid(cls.rg().kernel_graph()) &&
              rg_is_faithful(cls.rg());
    auto rep = grpd_verify_generic(cls, catalog, 6);
    cases += rep.cases_checked;
    ok = ok && rep.pass();
    // discrete kernels classify by the discrete automorphism graph
    if (x.graph().objects().is_full()) {
      const auto &base = cls.rg().base_graph();
      ok = ok && base.star_g().is_trivial() && base.g_star().is_trivial() &&
           is_isomorphic(base.carrier(),
                         automorphism_group(x.carrier()).group);
    }
    if (!ok) {
      ++bad;
      std::cout << "  criterion 6 subcase failed: " << label << "\n";
    }
  }
  report(6, "groupoid classifier", bad == 0,
         "6 kernels, " + std::to_string(cases) + " groupoid extensions, " +
             std::to_string(bad) + " failures",
         start, 1200000);
}

// ---- criterion 7: the law suites sweep clean over the catalog ----

void criterion_laws() {
  auto start = Clock::now();
  auto reports = run_laws("all", bundled_catalog());
  long bad = 0;
  std::string counts;
  for (const auto &r : reports) {
    if (!r.pass() || r.cases_checked == 0)
      ++bad;
    counts += r.law + " " + std::to_string(r.cases_checked) + "/" +
              std::to_string(r.vacuous) + " ";
  }
  report(7, "law suites (checked/vacuous)", bad == 0, counts, start, 0);
}

// ---- criterion 8: groupoid <-> crossed module round trips ----

void criterion_xmod_round_trip() {
  auto start = Clock::now();
  long cases = 0, bad = 0;
  for (const auto &nx : bundled_crossed_modules()) {
    ++cases;
    bool ok = true;
    try {
      // axioms re-verified from the raw parts
      CrossedModule::make(nx.xmod.boundary(), nx.xmod.action());
      auto g = xmod_to_cat1(nx.xmod);
      ok = is_groupoid(g.graph()) && xmod_isomorphic(nx.xmod, cat1_to_xmod(g));
    } catch (const Error &) {
      ok = false;
    }
    if (!ok) {
      ++bad;
      std::cout << "  criterion 8 subcase failed: " << nx.name << "\n";
    }
  }
  // and from the groupoid side on every small catalog structure
  for (const auto &g : catalog_max(6))
    for (const auto &rg : all_rg_structures(g)) {
      if (!is_groupoid(rg))
        continue;
      ++cases;
      auto x = InternalGroupoid::make(rg);
      if (!rg_isomorphic(xmod_to_cat1(cat1_to_xmod(x)).graph(), rg))
        ++bad;
    }
  report(8, "crossed module round trip", bad == 0,
         std::to_string(cases) + " conversions, " + std::to_string(bad) +
             " failures",
         start, 0);
}

// ---- criterion 9: byte-identical reports across runs and worker counts ----

int run_cli(const std::string &args) {
  std::string cmd = std::string(GRPD_CLI_PATH) + " " + args +
                    " >/dev/null 2>&1";
  return std::system(cmd.c_str());
}

void criterion_determinism() {
  auto start = Clock::now();
  bool ok = true;
  std::string detail;

  write_file("acc_kernel.grp", group_to_text(cyclic(3)));
  struct Run {
    std::string args;
    std::string out;
  };
  std::vector<std::vector<Run>> batches = {
      {{"generic acc_kernel.grp --verify --max-base 6 --jobs 1 --report "
        "acc_r1.json",
        "acc_r1.json"},
       {"generic acc_kernel.grp --verify --max-base 6 --jobs 4 --report "
        "acc_r2.json",
        "acc_r2.json"},
       {"generic acc_kernel.grp --verify --max-base 6 --jobs 4 --report "
        "acc_r3.json",
        "acc_r3.json"}},
      {{"laws run --law all --jobs 1 --report acc_l1.json", "acc_l1.json"},
       {"laws run --law all --jobs 4 --report acc_l2.json", "acc_l2.json"}}};
  for (const auto &batch : batches) {
    std::string first;
    for (const auto &run : batch) {
      if (run_cli(run.args) != 0) {
        ok = false;
        detail += "nonzero exit for '" + run.args + "'; ";
        continue;
      }
      auto text = read_file(run.out);
      if (first.empty())
        first = text;
      else if (text != first) {
        ok = false;
        detail += run.out + " differs; ";
      }
      std::remove(run.out.c_str());
    }
  }
  std::remove("acc_kernel.grp");
  if (ok)
    detail = "reports byte-identical across jobs 1 and 4 and repeat runs";
  report(9, "report determinism", ok, detail, start, 0);
}

} // namespace

int main() {
  criterion_commutator_oracle();
  criterion_generic_terminal();
  criterion_faithfulness_agreement();
  criterion_rg_classifier_terminal();
  criterion_largest_subextension();
  criterion_groupoid_classifier();
  criterion_laws();
  criterion_xmod_round_trip();
  criterion_determinism();
  if (failures_total == 0)
    std::cout << "all 9 acceptance criteria hold\n";
  else
    std::cout << failures_total << " acceptance criteria failed\n";
  return failures_total == 0 ? 0 : 1;
}
