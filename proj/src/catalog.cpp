#include "grpd/catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace grpd {

namespace {

std::vector<std::vector<int>> permutations_of(int n) {
  std::vector<int> p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool is_even(const std::vector<int> &p) {
  int inversions = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j])
        ++inversions;
  return inversions % 2 == 0;
}

GroupPtr permutation_group(std::vector<std::vector<int>> perms,
                           std::string name) {
  const int n = static_cast<int>(perms.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i)
    index[perms[static_cast<size_t>(i)]] = i;
  std::vector<int> table(static_cast<size_t>(n) * n);
  std::vector<int> prod(perms[0].size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const auto &pa = perms[static_cast<size_t>(a)];
      const auto &pb = perms[static_cast<size_t>(b)];
      for (size_t x = 0; x < prod.size(); ++x)
        prod[x] = pa[static_cast<size_t>(pb[x])];
      table[static_cast<size_t>(a) * n + b] = index.at(prod);
    }
  return FiniteGroup::make(n, std::move(table), std::move(name));
}

} // namespace

GroupPtr cyclic(int n) {
  if (n < 1)
    throw Error(ErrorKind::BadInput, "cyclic order must be positive");
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[static_cast<size_t>(a) * n + b] = (a + b) % n;
  return FiniteGroup::make(n, std::move(table), "Z" + std::to_string(n));
}

GroupPtr dihedral(int sides) {
  if (sides < 1)
    throw Error(ErrorKind::BadInput, "dihedral needs at least one side");
  const int n = sides, order = 2 * sides;
  // rotation i, flip j at index i + n j; flips conjugate rotations to
  // their inverses.
  std::vector<int> table(static_cast<size_t>(order) * order);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      const int i1 = a % n, j1 = a / n, i2 = b % n, j2 = b / n;
      const int i = (i1 + (j1 ? n - i2 : i2)) % n;
      table[static_cast<size_t>(a) * order + b] = i + n * (j1 ^ j2);
    }
  return FiniteGroup::make(order, std::move(table),
                           "D" + std::to_string(order));
}

GroupPtr dicyclic(int n) {
  if (n < 1)
    throw Error(ErrorKind::BadInput, "dicyclic parameter must be positive");
  const int m = 2 * n, order = 4 * n;
  // a^i b^j at index i + m j with a^m = 1, b^2 = a^n, b a b^-1 = a^-1.
  std::vector<int> table(static_cast<size_t>(order) * order);
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y) {
      const int i1 = x % m, j1 = x / m, i2 = y % m, j2 = y / m;
      int i = (i1 + (j1 ? m - i2 : i2)) % m;
      int j = j1 + j2;
      if (j == 2) {
        i = (i + n) % m;
        j = 0;
      }
      table[static_cast<size_t>(x) * order + y] = i + m * j;
    }
  return FiniteGroup::make(order, std::move(table),
                           "Dic" + std::to_string(n));
}

GroupPtr symmetric(int n) {
  return permutation_group(permutations_of(n), "S" + std::to_string(n));
}

GroupPtr alternating(int n) {
  std::vector<std::vector<int>> evens;
  for (auto &p : permutations_of(n))
    if (is_even(p))
      evens.push_back(std::move(p));
  return permutation_group(std::move(evens), "A" + std::to_string(n));
}

GroupPtr renamed(const GroupPtr &g, std::string name) {
  return FiniteGroup::make(g->order(), g->flat_table(), std::move(name));
}

GroupPtr named_product(const GroupPtr &a, const GroupPtr &b,
                       std::string name) {
  return renamed(direct_product(a, b).group, std::move(name));
}

std::vector<GroupPtr> bundled_catalog() {
  std::vector<GroupPtr> out;
  out.push_back(cyclic(1));
  out.push_back(cyclic(2));
  out.push_back(cyclic(3));
  out.push_back(cyclic(4));
  out.push_back(named_product(cyclic(2), cyclic(2), "V4"));
  out.push_back(cyclic(5));
  out.push_back(cyclic(6));
  out.push_back(symmetric(3));
  out.push_back(cyclic(7));
  out.push_back(cyclic(8));
  out.push_back(named_product(cyclic(2), cyclic(4), "Z2xZ4"));
  out.push_back(named_product(cyclic(2),
                              named_product(cyclic(2), cyclic(2), "V4"),
                              "Z2xZ2xZ2"));
  out.push_back(dihedral(4));
  out.push_back(renamed(dicyclic(2), "Q8"));
  out.push_back(cyclic(9));
  out.push_back(named_product(cyclic(3), cyclic(3), "Z3xZ3"));
  out.push_back(cyclic(10));
  out.push_back(dihedral(5));
  out.push_back(cyclic(11));
  out.push_back(cyclic(12));
  out.push_back(named_product(cyclic(2), cyclic(6), "Z2xZ6"));
  out.push_back(dihedral(6));
  out.push_back(alternating(4));
  out.push_back(dicyclic(3));
  out.push_back(cyclic(16));
  out.push_back(dihedral(8));
  out.push_back(renamed(dicyclic(4), "Q16"));
  return out;
}

CrossedModule inclusion_xmod(const GroupPtr &g, const Subgroup &n) {
  if (!n.is_normal())
    throw Error(ErrorKind::NotNormal,
                "conjugation crossed module needs a normal subgroup");
  SubgroupGroup t = as_group(n);
  std::vector<std::vector<int>> perms(
      static_cast<size_t>(g->order()),
      std::vector<int>(static_cast<size_t>(t.group->order())));
  for (int a = 0; a < g->order(); ++a)
    for (int tau = 0; tau < t.group->order(); ++tau)
      perms[static_cast<size_t>(a)][static_cast<size_t>(tau)] =
          t.index_of[g->conj(a, t.inclusion(tau))];
  return CrossedModule::make(t.inclusion,
                             Action::make(g, t.group, std::move(perms)));
}

namespace {

CrossedModule zero_xmod(const GroupPtr &t, const GroupPtr &g, Action act) {
  return CrossedModule::make(GroupHom::zero(t, g), std::move(act));
}

// Elements of order dividing k, as a subgroup when they form one.
Subgroup torsion_subgroup(const GroupPtr &g, int k) {
  std::vector<int> elems;
  for (int x = 0; x < g->order(); ++x)
    if (g->power(x, k) == 0)
      elems.push_back(x);
  return Subgroup::make(g, std::move(elems));
}

} // namespace

std::vector<NamedXmod> bundled_crossed_modules() {
  std::vector<NamedXmod> out;
  auto z2 = cyclic(2);
  auto s3 = symmetric(3);
  auto z4 = cyclic(4);
  auto a4 = alternating(4);
  auto d8 = dihedral(4);
  out.push_back({"inc-1-Z2", inclusion_xmod(z2, Subgroup::trivial(z2))});
  out.push_back({"inc-1-S3", inclusion_xmod(s3, Subgroup::trivial(s3))});
  {
    auto z1 = cyclic(1);
    auto t = cyclic(2);
    out.push_back({"quot-Z2-1", zero_xmod(t, z1, Action::trivial(z1, t))});
  }
  {
    auto z1 = cyclic(1);
    auto t = cyclic(3);
    out.push_back({"quot-Z3-1", zero_xmod(t, z1, Action::trivial(z1, t))});
  }
  out.push_back({"inc-A3-S3", inclusion_xmod(s3, torsion_subgroup(s3, 3))});
  out.push_back({"inc-Z2-Z4", inclusion_xmod(z4, Subgroup::make(z4, {0, 2}))});
  {
    // Zero boundary Z3 -> Z2 with the nontrivial element inverting.
    auto t = cyclic(3);
    auto g = cyclic(2);
    Action invert = Action::make(g, t, {{0, 1, 2}, {0, 2, 1}});
    out.push_back({"mod-Z3-Z2", zero_xmod(t, g, std::move(invert))});
  }
  {
    // Zero boundary V4 -> Z3 with the generator cycling the involutions.
    auto t = named_product(cyclic(2), cyclic(2), "V4");
    auto g = cyclic(3);
    Action rotate =
        Action::make(g, t, {{0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}});
    out.push_back({"mod-V4-Z3", zero_xmod(t, g, std::move(rotate))});
  }
  out.push_back({"inc-V4-A4", inclusion_xmod(a4, torsion_subgroup(a4, 2))});
  out.push_back(
      {"inc-Z4-D8", inclusion_xmod(d8, Subgroup::make(d8, {0, 1, 2, 3}))});
  out.push_back({"id-S3", inclusion_xmod(s3, Subgroup::full(s3))});
  return out;
}

} // namespace grpd
