#include "doctest.h"

#include <algorithm>
#include <functional>

#include "grpd/catalog.hpp"
#include "grpd/lattice.hpp"
#include "grpd/splitext.hpp"

using namespace grpd;

namespace {

bool throws_kind(ErrorKind kind, const std::function<void()> &fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.kind() == kind;
  }
  return false;
}

SplitExtension trivial_extension(const GroupPtr &x, const GroupPtr &b) {
  return semidirect_product(Action::trivial(b, x));
}

} // namespace

TEST_CASE("split extension wiring is validated") {
  auto z2 = cyclic(2);
  auto z4 = cyclic(4);
  auto incl = GroupHom::make(z2, z4, {0, 2});
  auto par = GroupHom::make(z4, z2, {0, 1, 0, 1});
  auto sec = GroupHom::make(z2, z4, {0, 2});
  // alpha . beta = 0, not the identity
  CHECK(throws_kind(ErrorKind::SectionNotSplit, [&] {
    SplitExtension::make(incl, par, sec);
  }));
  CHECK(throws_kind(ErrorKind::KernelMismatch, [&] {
    // image(kappa) = {0, 2} but alpha is injective
    SplitExtension::make(incl, GroupHom::identity(z4),
                         GroupHom::identity(z4));
  }));
  auto dp = direct_product(z2, z2);
  CHECK(throws_kind(ErrorKind::KernelMismatch, [&] {
    // kappa not injective
    SplitExtension::make(GroupHom::zero(z2, dp.group), dp.proj2, dp.inj2);
  }));
  CHECK(throws_kind(ErrorKind::BadInput, [&] {
    // beta attached to the wrong group
    SplitExtension::make(dp.inj1, dp.proj2, GroupHom::identity(dp.group));
  }));

  auto e = SplitExtension::make(dp.inj1, dp.proj2, dp.inj2);
  CHECK(e.kernel_group()->order() == 2);
  CHECK(e.total()->order() == 4);
  for (int a = 0; a < 4; ++a)
    CHECK(a == e.compose_parts(e.kernel_part(a), e.base_part(a)));
}

TEST_CASE("semidirect products realise the familiar small groups") {
  auto z3 = cyclic(3);
  auto z2 = cyclic(2);
  auto inv3 = Action::make(z2, z3, {{0, 1, 2}, {0, 2, 1}});
  auto e = semidirect_product(inv3);
  CHECK(e.total()->order() == 6);
  CHECK(is_isomorphic(e.total(), symmetric(3)));
  CHECK(e.action() == inv3);

  auto z4 = cyclic(4);
  auto inv4 = Action::make(z2, z4, {{0, 1, 2, 3}, {0, 3, 2, 1}});
  CHECK(is_isomorphic(semidirect_product(inv4).total(), dihedral(4)));

  CHECK(is_isomorphic(trivial_extension(z3, z4).total(), cyclic(12)));

  // pair layout: (x, b) at x * |B| + b
  for (int x = 0; x < 3; ++x)
    for (int b = 0; b < 2; ++b) {
      int a = e.compose_parts(x, b);
      CHECK(a == x * 2 + b);
      CHECK(e.kernel_part(a) == x);
      CHECK(e.base_part(a) == b);
    }
  // multiplication twists by the action
  CHECK(e.total()->mul(e.compose_parts(1, 1), e.compose_parts(1, 0)) ==
        e.compose_parts(e.kernel_group()->mul(1, inv3.apply(1, 1)), 1));
}

TEST_CASE("the evaluation extension has holomorph totals") {
  auto v4 = named_product(cyclic(2), cyclic(2), "V4");
  auto gen = generic_split_extension(v4);
  CHECK(gen.kernel_group()->order() == 4);
  CHECK(gen.base()->order() == 6);
  CHECK(gen.total()->order() == 24);
  CHECK(is_isomorphic(gen.total(), symmetric(4)));

  auto z5 = cyclic(5);
  auto gen5 = generic_split_extension(z5);
  CHECK(gen5.total()->order() == 20);
  CHECK(gen5.base()->order() == 4);

  auto z3 = cyclic(3);
  auto gen3 = generic_split_extension(z3);
  CHECK(is_isomorphic(gen3.total(), symmetric(3)));

  // its action is the evaluation action
  auto aut = automorphism_group(v4);
  CHECK(gen.action() == evaluation_action(aut));
}

TEST_CASE("morphism enumeration agrees with a raw scan over total maps") {
  auto z2 = cyclic(2);
  auto z3 = cyclic(3);
  auto s3e = semidirect_product(
      Action::make(z2, z3, {{0, 1, 2}, {0, 2, 1}}));
  auto gen = generic_split_extension(z3);

  auto ms = morphisms_between(s3e, gen);
  REQUIRE(ms.size() == 1);
  // reference: scan every pair of homs (v, w) and keep commuting squares
  int reference = 0;
  for (const auto &v : all_homs(s3e.total(), gen.total()))
    for (const auto &w : all_homs(s3e.base(), gen.base())) {
      bool ok = true;
      for (int x = 0; x < 3 && ok; ++x)
        ok = v[static_cast<size_t>(s3e.kappa()(x))] == gen.kappa()(x);
      for (int a = 0; a < 6 && ok; ++a)
        ok = w[static_cast<size_t>(s3e.alpha()(a))] ==
             gen.alpha()(v[static_cast<size_t>(a)]);
      for (int b = 0; b < 2 && ok; ++b)
        ok = v[static_cast<size_t>(s3e.beta()(b))] ==
             gen.beta()(w[static_cast<size_t>(b)]);
      reference += ok;
    }
  CHECK(reference == 1);

  // morphisms into a trivial-action target kill the action data
  auto triv = trivial_extension(z3, z2);
  CHECK(morphisms_between(triv, triv).size() == 2);
  CHECK(throws_kind(ErrorKind::KernelMismatch, [&] {
    morphisms_between(trivial_extension(z2, z2), triv);
  }));

  // the validated morphism struct accepts the identity and rejects a
  // non-commuting square
  CHECK_NOTHROW(SplitExtMorphism::make(triv, triv,
                                       GroupHom::identity(triv.total()),
                                       GroupHom::identity(triv.base())));
  CHECK(throws_kind(ErrorKind::BadInput, [&] {
    SplitExtMorphism::make(triv, triv, GroupHom::identity(triv.total()),
                           GroupHom::zero(triv.base(), triv.base()));
  }));

  // count_morphisms respects its cap
  auto base_maps = all_homs(triv.base(), triv.base());
  CHECK(count_morphisms(triv, triv, base_maps, 10) == 2);
  CHECK(count_morphisms(triv, triv, base_maps, 1) == 1);
  auto itm = induced_total_map(triv, triv, base_maps[0]);
  CHECK(itm.has_value());
}

TEST_CASE("faithfulness criterion matches enumeration") {
  auto cat = bundled_catalog();
  std::vector<GroupPtr> small;
  for (const auto &g : cat)
    if (g->order() <= 6)
      small.push_back(g);

  auto z3 = cyclic(3);
  auto z2 = cyclic(2);
  auto faithful = semidirect_product(
      Action::make(z2, z3, {{0, 1, 2}, {0, 2, 1}}));
  auto unfaithful = trivial_extension(z3, z2);
  CHECK(is_faithful_criterion(faithful));
  CHECK_FALSE(is_faithful_criterion(unfaithful));
  CHECK(is_faithful_criterion(generic_split_extension(z3)));
  CHECK(is_faithful_criterion(generic_split_extension(
      named_product(cyclic(2), cyclic(2), "V4"))));

  HomCache cache;
  CHECK(is_faithful_bruteforce(faithful, small, 6, &cache));
  CHECK_FALSE(is_faithful_bruteforce(unfaithful, small, 6, &cache));

  // every catalog extension with kernel Z2 or Z3 over bases <= 6: both
  // faithfulness routes agree
  for (const auto &x : {cyclic(2), cyclic(3)})
    for (const auto &b : small)
      for (const auto &act : all_actions(b, x)) {
        auto e = semidirect_product(act);
        CHECK(is_faithful_criterion(e) ==
              is_faithful_bruteforce(e, small, 6, &cache));
      }
}

TEST_CASE("hom cache owns its keys so recreated groups cannot alias") {
  HomCache cache;
  std::vector<const FiniteGroup *> addresses;
  for (int round = 0; round < 32; ++round) {
    // churn: build a short-lived group, cache homs into it, drop it
    auto tmp = cyclic(3);
    addresses.push_back(tmp.get());
    CHECK(cache.get(tmp, tmp).size() == 3);
    auto z6 = cyclic(6);
    CHECK(cache.get(z6, tmp).size() == 3);
  }
  // if any address was reused, the cached list must still be the right one
  auto fresh = cyclic(3);
  bool reused = std::find(addresses.begin(), addresses.end(), fresh.get()) !=
                addresses.end();
  CHECK(cache.get(fresh, fresh).size() == 3);
  CHECK(cache.get(cyclic(6), fresh).size() == 3);
  (void)reused; // either way the counts above must hold
}

TEST_CASE("the generic extension is verified terminal over a small catalog") {
  std::vector<GroupPtr> bases;
  for (const auto &g : bundled_catalog())
    if (g->order() <= 6)
      bases.push_back(g);

  auto z3 = cyclic(3);
  auto report = verify_generic(generic_split_extension(z3), bases, 6);
  CHECK(report.pass());
  CHECK(report.cases_checked > 0);
  CHECK(report.kernel == z3->name());
  CHECK(report.candidate_order == 6);

  // a faithful but non-terminal candidate fails with a missing arrow: the
  // factor swap on Z2 x Z2 cannot receive the order-3 rotation extension
  auto z2 = cyclic(2);
  auto v4 = named_product(cyclic(2), cyclic(2), "V4");
  auto swap_ext = semidirect_product(
      Action::make(z2, v4, {{0, 1, 2, 3}, {0, 2, 1, 3}}));
  CHECK(is_faithful_criterion(swap_ext));
  auto bad = verify_generic(swap_ext, bases, 6);
  CHECK_FALSE(bad.pass());
  bool saw_missing = false;
  for (const auto &f : bad.failures)
    saw_missing = saw_missing || f.kind == VerifyFailure::Kind::Missing;
  CHECK(saw_missing);

  // an unfaithful candidate fails with a duplicate arrow
  auto dup = verify_generic(trivial_extension(z3, z2), bases, 6);
  CHECK_FALSE(dup.pass());
  bool saw_dup = false;
  for (const auto &f : dup.failures)
    saw_dup = saw_dup || f.kind == VerifyFailure::Kind::NonUnique;
  CHECK(saw_dup);

  // reports are independent of the worker count
  auto serial = verify_generic(generic_split_extension(z3), bases, 6, 1);
  auto parallel = verify_generic(generic_split_extension(z3), bases, 6, 4);
  CHECK(serial.cases_checked == parallel.cases_checked);
  CHECK(serial.failures.size() == parallel.failures.size());
}

TEST_CASE("all_actions enumerates homs into the automorphism group") {
  auto z2 = cyclic(2);
  auto z3 = cyclic(3);
  CHECK(all_actions(z2, z3).size() == 2);
  CHECK(all_actions(z3, z3).size() == 1);
  CHECK(all_actions(cyclic(4), z3).size() == 2);
  auto v4 = named_product(cyclic(2), cyclic(2), "");
  CHECK(all_actions(z2, v4).size() ==
        all_homs(z2, automorphism_group(v4).group).size());
  for (const auto &a : all_actions(symmetric(3), z3))
    CHECK(a.actor()->order() == 6);
}
