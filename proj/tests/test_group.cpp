#include "doctest.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "grpd/catalog.hpp"
#include "grpd/group.hpp"

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

// Every map dom -> cod, as index vectors.  Only usable for tiny sizes.
std::vector<std::vector<int>> all_maps(int dom, int cod) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<size_t>(dom), 0);
  for (;;) {
    out.push_back(cur);
    int i = 0;
    while (i < dom && ++cur[static_cast<size_t>(i)] == cod)
      cur[static_cast<size_t>(i++)] = 0;
    if (i == dom)
      break;
  }
  return out;
}

bool full_hom_check(const FiniteGroup &dom, const FiniteGroup &cod,
                    const std::vector<int> &map) {
  if (map[0] != 0)
    return false;
  for (int a = 0; a < dom.order(); ++a)
    for (int b = 0; b < dom.order(); ++b)
      if (map[dom.mul(a, b)] != cod.mul(map[a], map[b]))
        return false;
  return true;
}

} // namespace

TEST_CASE("table validation rejects each defect with its own error kind") {
  CHECK(throws_kind(ErrorKind::NoIdentity, [] {
    // a Latin square none of whose rows is the identity permutation
    FiniteGroup::make(3, {1, 0, 2, 0, 2, 1, 2, 1, 0});
  }));
  CHECK(throws_kind(ErrorKind::IdentityNotZero, [] {
    FiniteGroup::make(2, {1, 0, 0, 1}); // unit at index 1
  }));
  CHECK(throws_kind(ErrorKind::IdentityNotZero, [] {
    FiniteGroup::make(3, {2, 0, 1, 0, 1, 2, 1, 2, 0});
  }));
  CHECK(throws_kind(ErrorKind::NoInverse, [] {
    FiniteGroup::make(2, {0, 1, 1, 1});
  }));
  CHECK(throws_kind(ErrorKind::NotAssociative, [] {
    // (1*1)*2 = 2 but 1*(1*2) = 0 in this magma
    FiniteGroup::make(3, {0, 1, 2, 1, 0, 1, 2, 2, 0});
  }));
  CHECK(throws_kind(ErrorKind::BadInput, [] {
    FiniteGroup::make(2, {0, 1, 1, 7});
  }));
  CHECK(throws_kind(ErrorKind::BadInput, [] {
    FiniteGroup::make(2, {0, 1, 1});
  }));
  CHECK(FiniteGroup::make(1, {0})->order() == 1);
}

TEST_CASE("group arithmetic on the symmetric group of degree three") {
  auto s3 = symmetric(3);
  REQUIRE(s3->order() == 6);
  CHECK_FALSE(s3->is_abelian());
  CHECK(s3->generators().size() == 2);
  for (int a = 0; a < 6; ++a) {
    CHECK(s3->mul(a, s3->inv(a)) == 0);
    CHECK(s3->mul(s3->inv(a), a) == 0);
    CHECK(s3->power(a, s3->element_order(a)) == 0);
    for (int b = 0; b < 6; ++b)
      CHECK(s3->comm(a, b) ==
            s3->mul(s3->mul(a, b), s3->mul(s3->inv(a), s3->inv(b))));
  }
  std::multiset<int> orders;
  for (int a = 0; a < 6; ++a)
    orders.insert(s3->element_order(a));
  CHECK(orders == std::multiset<int>{1, 2, 2, 2, 3, 3});
  CHECK(cyclic(6)->is_abelian());
  CHECK(cyclic(6)->generators() == std::vector<int>{1});
}

TEST_CASE("catalog builders produce the expected structures") {
  CHECK(dihedral(4)->order() == 8);
  CHECK(dicyclic(2)->order() == 8);
  CHECK(alternating(4)->order() == 12);
  CHECK(is_isomorphic(symmetric(3), dihedral(3)));
  CHECK(is_isomorphic(dihedral(2), named_product(cyclic(2), cyclic(2), "")));
  CHECK_FALSE(is_isomorphic(cyclic(4), named_product(cyclic(2), cyclic(2), "")));
  CHECK_FALSE(is_isomorphic(dihedral(4), dicyclic(2)));
  CHECK_FALSE(is_isomorphic(dihedral(6), dicyclic(3)));
  // the quaternion element -1 is the only involution
  auto q8 = dicyclic(2);
  int involutions = 0;
  for (int a = 0; a < 8; ++a)
    involutions += q8->element_order(a) == 2;
  CHECK(involutions == 1);

  auto cat = bundled_catalog();
  CHECK(cat.size() == 27);
  CHECK(std::is_sorted(cat.begin(), cat.end(),
                       [](const GroupPtr &a, const GroupPtr &b) {
                         return a->order() < b->order();
                       }));
  std::set<std::string> names;
  for (auto &g : cat) {
    CHECK(!g->name().empty());
    names.insert(g->name());
  }
  CHECK(names.size() == cat.size());
  // no two entries are isomorphic
  for (size_t i = 0; i < cat.size(); ++i)
    for (size_t j = i + 1; j < cat.size(); ++j)
      if (cat[i]->order() == cat[j]->order())
        CHECK_FALSE(is_isomorphic(cat[i], cat[j]));
}

TEST_CASE("homomorphism construction and validation") {
  auto z4 = cyclic(4);
  auto z2 = cyclic(2);
  auto h = GroupHom::make(z4, z2, {0, 1, 0, 1});
  CHECK(h(3) == 1);
  CHECK(h.is_surjective());
  CHECK_FALSE(h.is_injective());
  CHECK(throws_kind(ErrorKind::NotHomomorphism, [&] {
    GroupHom::make(z4, z2, {0, 1, 1, 0});
  }));
  CHECK(throws_kind(ErrorKind::NotHomomorphism, [&] {
    GroupHom::make(z4, z2, {1, 0, 1, 0});
  }));
  CHECK(GroupHom::identity(z4).is_identity());
  CHECK(GroupHom::zero(z4, z2).is_surjective() == false);
  auto sq = GroupHom::make(z4, z4, {0, 2, 0, 2});
  CHECK(compose(h, sq)(1) == 0);
  CHECK(kernel(h).elements() == std::vector<int>{0, 2});
  CHECK(image(sq).elements() == std::vector<int>{0, 2});
}

TEST_CASE("generator-based homomorphism test agrees with the full check") {
  auto pairs = {std::pair{cyclic(4), cyclic(4)},
                std::pair{named_product(cyclic(2), cyclic(2), "V4"),
                          cyclic(2)},
                std::pair{symmetric(3), cyclic(2)},
                std::pair{cyclic(6), symmetric(3)}};
  for (const auto &[dom, cod] : pairs) {
    long homs = 0;
    for (const auto &m : all_maps(dom->order(), cod->order())) {
      bool fast = is_hom_map(*dom, *cod, m);
      CHECK(fast == full_hom_check(*dom, *cod, m));
      homs += fast;
    }
    CHECK(homs == static_cast<long>(all_homs(dom, cod).size()));
  }
  CHECK(all_homs(cyclic(3), symmetric(3)).size() == 3);
  CHECK(all_homs(symmetric(3), cyclic(2)).size() == 2);
  CHECK(all_homs(cyclic(4), cyclic(4)).size() == 4);
  CHECK(all_homs(cyclic(1), symmetric(3)).size() == 1);
  CHECK(all_homs(symmetric(3), cyclic(1)).size() == 1);
}

TEST_CASE("automorphism groups match a brute-force bijection scan") {
  std::vector<GroupPtr> groups = {
      cyclic(1), cyclic(2), cyclic(6), named_product(cyclic(2), cyclic(2), ""),
      symmetric(3), cyclic(8), dihedral(4), dicyclic(2)};
  for (const auto &g : groups) {
    // reference: every bijection fixing 0 that preserves the table
    std::vector<int> perm(static_cast<size_t>(g->order()));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> reference;
    do {
      bool ok = true;
      for (int a = 0; a < g->order() && ok; ++a)
        for (int b = 0; b < g->order() && ok; ++b)
          ok = perm[static_cast<size_t>(g->mul(a, b))] ==
               g->mul(perm[static_cast<size_t>(a)],
                      perm[static_cast<size_t>(b)]);
      if (ok)
        reference.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    AutGroup aut = automorphism_group(g);
    CHECK(aut.autos == reference); // both lists are lex sorted
    CHECK(aut.group->order() == static_cast<int>(reference.size()));
    CHECK(aut.autos[0] == reference[0]); // identity first
    // the group table is composition
    for (int i = 0; i < aut.group->order(); ++i)
      for (int j = 0; j < aut.group->order(); ++j) {
        const auto &composed = aut.autos[static_cast<size_t>(
            aut.group->mul(i, j))];
        for (int x = 0; x < g->order(); ++x)
          CHECK(composed[static_cast<size_t>(x)] ==
                aut.autos[static_cast<size_t>(i)][static_cast<size_t>(
                    aut.autos[static_cast<size_t>(j)]
                             [static_cast<size_t>(x)])]);
      }
  }
  CHECK(automorphism_group(cyclic(8)).group->order() == 4);
  CHECK(automorphism_group(dihedral(4)).group->order() == 8);
  CHECK(automorphism_group(dicyclic(2)).group->order() == 24);
  CHECK(automorphism_group(
            named_product(cyclic(2),
                          named_product(cyclic(2), cyclic(2), ""), ""))
            .group->order() == 168);
  CHECK(is_isomorphic(automorphism_group(symmetric(3)).group, symmetric(3)));
}

TEST_CASE("subgroups, quotients and products") {
  auto s3 = symmetric(3);
  auto a3 = Subgroup::generated(s3, {3});
  CHECK(a3.elements() == std::vector<int>{0, 3, 4});
  CHECK(a3.is_normal());
  auto refl = Subgroup::generated(s3, {1});
  CHECK_FALSE(refl.is_normal());
  CHECK(refl.subset_of(Subgroup::full(s3)));
  CHECK(throws_kind(ErrorKind::BadInput, [&] {
    Subgroup::make(s3, {0, 1, 2}); // two transpositions do not close
  }));
  CHECK(throws_kind(ErrorKind::BadInput, [&] {
    Subgroup::make(s3, {1}); // missing the identity
  }));

  auto q = quotient(s3, a3);
  CHECK(q.group->order() == 2);
  CHECK(q.projection(1) == 1);
  CHECK(q.projection(3) == 0);
  CHECK(throws_kind(ErrorKind::NotNormal, [&] { quotient(s3, refl); }));

  SubgroupGroup sg = as_group(a3);
  CHECK(sg.group->order() == 3);
  CHECK(sg.inclusion(1) == 3);
  CHECK(sg.index_of[4] == 2);
  CHECK(sg.index_of[1] == -1);

  auto dp = direct_product(cyclic(2), cyclic(3));
  CHECK(dp.group->order() == 6);
  CHECK(is_isomorphic(dp.group, cyclic(6)));
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 3; ++b) {
      int e = dp.group->mul(dp.inj1(a), dp.inj2(b));
      CHECK(dp.proj1(e) == a);
      CHECK(dp.proj2(e) == b);
    }
}

TEST_CASE("actions are validated automorphism assignments") {
  auto z2 = cyclic(2);
  auto z3 = cyclic(3);
  auto inv = Action::make(z2, z3, {{0, 1, 2}, {0, 2, 1}});
  CHECK(inv.apply(1, 1) == 2);
  CHECK_FALSE(inv.is_trivial());
  CHECK(Action::trivial(z2, z3).is_trivial());
  CHECK(throws_kind(ErrorKind::BadInput, [&] {
    Action::make(z2, z3, {{0, 1, 2}, {0, 0, 0}}); // not a bijection
  }));
  CHECK(throws_kind(ErrorKind::BadInput, [&] {
    // each map is an automorphism but the assignment is not multiplicative
    Action::make(cyclic(4), z3, {{0, 1, 2}, {0, 2, 1}, {0, 2, 1}, {0, 1, 2}});
  }));
  auto aut = automorphism_group(z3);
  auto ev = evaluation_action(aut);
  for (int i = 0; i < aut.group->order(); ++i)
    for (int x = 0; x < 3; ++x)
      CHECK(ev.apply(i, x) == aut.autos[static_cast<size_t>(i)][static_cast<size_t>(x)]);
}

TEST_CASE("isomorphism search uses element order profiles correctly") {
  CHECK(is_isomorphic(cyclic(1), cyclic(1)));
  CHECK_FALSE(is_isomorphic(cyclic(2), cyclic(3)));
  CHECK_FALSE(is_isomorphic(cyclic(6), symmetric(3)));
  CHECK(is_isomorphic(alternating(3), cyclic(3)));
  CHECK(all_isomorphisms(symmetric(3), dihedral(3)).size() == 6);
  CHECK(all_isomorphisms(cyclic(5), cyclic(5)).size() == 4);
}
