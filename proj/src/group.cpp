#include "grpd/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace grpd {

const char *kind_name(ErrorKind k) {
  switch (k) {
  case ErrorKind::NotAssociative:
    return "NotAssociative";
  case ErrorKind::NoIdentity:
    return "NoIdentity";
  case ErrorKind::NoInverse:
    return "NoInverse";
  case ErrorKind::IdentityNotZero:
    return "IdentityNotZero";
  case ErrorKind::NotHomomorphism:
    return "NotHomomorphism";
  case ErrorKind::NotNormal:
    return "NotNormal";
  case ErrorKind::SectionNotSplit:
    return "SectionNotSplit";
  case ErrorKind::KernelMismatch:
    return "KernelMismatch";
  case ErrorKind::RelationViolated:
    return "RelationViolated";
  case ErrorKind::IncompatibleAction:
    return "IncompatibleAction";
  case ErrorKind::NotFaithful:
    return "NotFaithful";
  case ErrorKind::KernelNotGroupoid:
    return "KernelNotGroupoid";
  case ErrorKind::NotCrossedModule:
    return "NotCrossedModule";
  case ErrorKind::NotGroupoid:
    return "NotGroupoid";
  case ErrorKind::NotNormalInTotal:
    return "NotNormalInTotal";
  case ErrorKind::ParseError:
    return "ParseError";
  case ErrorKind::BadInput:
    return "BadInput";
  }
  return "UnknownError";
}

namespace {

// Closure of seed under the binary operation given by flat table.  Returns
// the members in discovery order; seed elements come first.
std::vector<int> magma_closure(int n, const std::vector<int> &table,
                               std::vector<int> seed) {
  std::vector<char> in(n, 0);
  std::vector<int> list;
  for (int s : seed) {
    if (!in[s]) {
      in[s] = 1;
      list.push_back(s);
    }
  }
  for (size_t i = 0; i < list.size(); ++i) {
    for (size_t j = 0; j < list.size(); ++j) {
      int p = table[static_cast<size_t>(list[i]) * n + list[j]];
      if (!in[p]) {
        in[p] = 1;
        list.push_back(p);
      }
      int q = table[static_cast<size_t>(list[j]) * n + list[i]];
      if (!in[q]) {
        in[q] = 1;
        list.push_back(q);
      }
    }
  }
  return list;
}

// Greedy generating set: repeatedly adjoin the least element outside the
// closure so far.  For a group table this needs at most log2(n) generators.
std::vector<int> greedy_generators(int n, const std::vector<int> &table) {
  std::vector<int> gens;
  std::vector<int> closed = magma_closure(n, table, {0});
  while (static_cast<int>(closed.size()) < n) {
    std::vector<char> in(n, 0);
    for (int x : closed)
      in[x] = 1;
    int next = -1;
    for (int x = 0; x < n; ++x) {
      if (!in[x]) {
        next = x;
        break;
      }
    }
    gens.push_back(next);
    closed.push_back(next);
    closed = magma_closure(n, table, closed);
  }
  return gens;
}

} // namespace

GroupPtr FiniteGroup::make(int order, std::vector<int> flat_table,
                           std::string name) {
  if (order <= 0)
    throw Error(ErrorKind::BadInput, "group order must be positive");
  if (flat_table.size() != static_cast<size_t>(order) * order)
    throw Error(ErrorKind::BadInput, "multiplication table is not " +
                                         std::to_string(order) + "x" +
                                         std::to_string(order));
  const int n = order;
  for (int v : flat_table) {
    if (v < 0 || v >= n)
      throw Error(ErrorKind::BadInput,
                  "table entry " + std::to_string(v) + " out of range");
  }

  auto is_identity = [&](int e) {
    for (int a = 0; a < n; ++a) {
      if (flat_table[static_cast<size_t>(e) * n + a] != a ||
          flat_table[static_cast<size_t>(a) * n + e] != a)
        return false;
    }
    return true;
  };
  if (!is_identity(0)) {
    for (int e = 1; e < n; ++e) {
      if (is_identity(e))
        throw Error(ErrorKind::IdentityNotZero,
                    "identity is element " + std::to_string(e) +
                        ", expected 0");
    }
    throw Error(ErrorKind::NoIdentity, "table has no identity element");
  }

  std::vector<int> inv(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (flat_table[static_cast<size_t>(a) * n + b] == 0 &&
          flat_table[static_cast<size_t>(b) * n + a] == 0) {
        inv[a] = b;
        break;
      }
    }
    if (inv[a] < 0)
      throw Error(ErrorKind::NoInverse,
                  "element " + std::to_string(a) + " has no inverse");
  }

  // Light's associativity test: with S generating the magma it is enough to
  // check a(bc) = (ab)c for b in S.
  std::vector<int> gens = greedy_generators(n, flat_table);
  for (int b : gens) {
    for (int a = 0; a < n; ++a) {
      const int ab = flat_table[static_cast<size_t>(a) * n + b];
      for (int c = 0; c < n; ++c) {
        const int bc = flat_table[static_cast<size_t>(b) * n + c];
        if (flat_table[static_cast<size_t>(ab) * n + c] !=
            flat_table[static_cast<size_t>(a) * n + bc])
          throw Error(ErrorKind::NotAssociative,
                      "(a*b)*c != a*(b*c) at a=" + std::to_string(a) +
                          " b=" + std::to_string(b) +
                          " c=" + std::to_string(c));
      }
    }
  }

  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->n_ = n;
  g->table_ = std::move(flat_table);
  g->inv_ = std::move(inv);
  g->gens_ = std::move(gens);
  g->name_ = std::move(name);
  g->elem_order_.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    int x = a, k = 1;
    while (x != 0) {
      x = g->mul(x, a);
      ++k;
    }
    g->elem_order_[a] = k;
  }
  return g;
}

GroupPtr FiniteGroup::make(const std::vector<std::vector<int>> &table,
                           std::string name) {
  const int n = static_cast<int>(table.size());
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (const auto &row : table) {
    if (static_cast<int>(row.size()) != n)
      throw Error(ErrorKind::BadInput, "table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return make(n, std::move(flat), std::move(name));
}

int FiniteGroup::power(int a, int e) const {
  int r = 0;
  int base = e >= 0 ? a : inv(a);
  int k = e >= 0 ? e : -e;
  for (int i = 0; i < k; ++i)
    r = mul(r, base);
  return r;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a))
        return false;
  return true;
}

bool same_table(const FiniteGroup &a, const FiniteGroup &b) {
  return a.order() == b.order() && a.flat_table() == b.flat_table();
}

bool same_group(const GroupPtr &a, const GroupPtr &b) {
  if (a == b)
    return true;
  if (!a || !b)
    return false;
  return same_table(*a, *b);
}

bool is_hom_map(const FiniteGroup &dom, const FiniteGroup &cod,
                const std::vector<int> &map) {
  const int n = dom.order();
  if (static_cast<int>(map.size()) != n)
    return false;
  for (int v : map)
    if (v < 0 || v >= cod.order())
      return false;
  if (map[0] != 0)
    return false;
  // map[x*g] == map[x]*map[g] for every x and generator g extends to full
  // multiplicativity because the generators reach every element by products.
  for (int g : dom.generators()) {
    for (int x = 0; x < n; ++x) {
      if (map[dom.mul(x, g)] != cod.mul(map[x], map[g]))
        return false;
    }
  }
  return true;
}

GroupHom GroupHom::make(GroupPtr dom, GroupPtr cod, std::vector<int> map) {
  if (!dom || !cod)
    throw Error(ErrorKind::BadInput, "hom endpoints missing");
  if (static_cast<int>(map.size()) != dom->order())
    throw Error(ErrorKind::NotHomomorphism,
                "map length " + std::to_string(map.size()) +
                    " does not match domain order " +
                    std::to_string(dom->order()));
  for (int v : map)
    if (v < 0 || v >= cod->order())
      throw Error(ErrorKind::NotHomomorphism,
                  "map value " + std::to_string(v) + " out of range");
  if (map[0] != 0)
    throw Error(ErrorKind::NotHomomorphism, "map does not fix the identity");
  if (!is_hom_map(*dom, *cod, map))
    throw Error(ErrorKind::NotHomomorphism,
                "map is not multiplicative");
  return GroupHom(std::move(dom), std::move(cod), std::move(map));
}

GroupHom GroupHom::identity(GroupPtr g) {
  std::vector<int> map(g->order());
  std::iota(map.begin(), map.end(), 0);
  return GroupHom(g, g, std::move(map));
}

GroupHom GroupHom::zero(GroupPtr dom, GroupPtr cod) {
  return GroupHom(std::move(dom), std::move(cod),
                  std::vector<int>(dom ? dom->order() : 0, 0));
}

bool GroupHom::is_injective() const {
  std::vector<char> seen(cod_->order(), 0);
  for (int v : map_) {
    if (seen[v])
      return false;
    seen[v] = 1;
  }
  return true;
}

bool GroupHom::is_surjective() const {
  std::vector<char> seen(cod_->order(), 0);
  int count = 0;
  for (int v : map_) {
    if (!seen[v]) {
      seen[v] = 1;
      ++count;
    }
  }
  return count == cod_->order();
}

bool GroupHom::is_identity() const {
  if (!same_group(dom_, cod_))
    return false;
  for (int x = 0; x < dom_->order(); ++x)
    if (map_[x] != x)
      return false;
  return true;
}

bool GroupHom::operator==(const GroupHom &other) const {
  return same_group(dom_, other.dom_) && same_group(cod_, other.cod_) &&
         map_ == other.map_;
}

GroupHom compose(const GroupHom &f, const GroupHom &g) {
  if (!same_group(f.dom(), g.cod()))
    throw Error(ErrorKind::BadInput, "compose: middle objects differ");
  std::vector<int> map(g.dom()->order());
  for (int x = 0; x < g.dom()->order(); ++x)
    map[x] = f(g(x));
  return GroupHom::make(g.dom(), f.cod(), std::move(map));
}

Subgroup Subgroup::make(GroupPtr parent, std::vector<int> elements) {
  if (!parent)
    throw Error(ErrorKind::BadInput, "subgroup needs a parent group");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());
  for (int x : elements)
    if (x < 0 || x >= parent->order())
      throw Error(ErrorKind::BadInput,
                  "subgroup element " + std::to_string(x) + " out of range");
  if (elements.empty() || elements[0] != 0)
    throw Error(ErrorKind::BadInput, "subgroup must contain the identity");
  std::vector<char> in(parent->order(), 0);
  for (int x : elements)
    in[x] = 1;
  for (int a : elements)
    for (int b : elements)
      if (!in[parent->mul(a, b)])
        throw Error(ErrorKind::BadInput,
                    "subgroup is not closed under multiplication");
  return Subgroup(std::move(parent), std::move(elements));
}

Subgroup Subgroup::generated(GroupPtr parent, const std::vector<int> &gens) {
  if (!parent)
    throw Error(ErrorKind::BadInput, "subgroup needs a parent group");
  std::vector<int> seed = {0};
  for (int x : gens) {
    if (x < 0 || x >= parent->order())
      throw Error(ErrorKind::BadInput,
                  "generator " + std::to_string(x) + " out of range");
    seed.push_back(x);
  }
  std::vector<int> closed =
      magma_closure(parent->order(), parent->flat_table(), seed);
  std::sort(closed.begin(), closed.end());
  return Subgroup(std::move(parent), std::move(closed));
}

Subgroup Subgroup::trivial(GroupPtr parent) {
  return Subgroup(std::move(parent), {0});
}

Subgroup Subgroup::full(GroupPtr parent) {
  std::vector<int> all(parent->order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(std::move(parent), std::move(all));
}

bool Subgroup::contains(int x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

bool Subgroup::is_normal() const {
  for (int g = 0; g < parent_->order(); ++g)
    for (int x : elements_)
      if (!contains(parent_->conj(g, x)))
        return false;
  return true;
}

bool Subgroup::subset_of(const Subgroup &other) const {
  return std::includes(other.elements_.begin(), other.elements_.end(),
                       elements_.begin(), elements_.end());
}

bool Subgroup::operator==(const Subgroup &other) const {
  return same_group(parent_, other.parent_) && elements_ == other.elements_;
}

Subgroup kernel(const GroupHom &f) {
  std::vector<int> elems;
  for (int x = 0; x < f.dom()->order(); ++x)
    if (f(x) == 0)
      elems.push_back(x);
  return Subgroup::make(f.dom(), std::move(elems));
}

Subgroup image(const GroupHom &f) {
  std::vector<int> elems(f.map());
  return Subgroup::make(f.cod(), std::move(elems));
}

Subgroup image_of(const GroupHom &f, const Subgroup &s) {
  if (!same_group(f.dom(), s.parent()))
    throw Error(ErrorKind::BadInput, "image_of: subgroup lives elsewhere");
  std::vector<int> elems;
  elems.reserve(s.elements().size());
  for (int x : s.elements())
    elems.push_back(f(x));
  return Subgroup::make(f.cod(), std::move(elems));
}

SubgroupGroup as_group(const Subgroup &s) {
  const auto &par = s.parent();
  const auto &elems = s.elements();
  const int m = static_cast<int>(elems.size());
  std::vector<int> index_of(par->order(), -1);
  for (int i = 0; i < m; ++i)
    index_of[elems[i]] = i;
  std::vector<int> table(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      table[static_cast<size_t>(i) * m + j] =
          index_of[par->mul(elems[i], elems[j])];
  GroupPtr g = FiniteGroup::make(m, std::move(table));
  GroupHom incl = GroupHom::make(g, par, elems);
  return SubgroupGroup{std::move(g), std::move(incl), std::move(index_of)};
}

Quotient quotient(const GroupPtr &g, const Subgroup &n) {
  if (!same_group(g, n.parent()))
    throw Error(ErrorKind::BadInput, "quotient: subgroup lives elsewhere");
  if (!n.is_normal())
    throw Error(ErrorKind::NotNormal, "subgroup of order " +
                                          std::to_string(n.size()) +
                                          " is not normal");
  const int order = g->order();
  // Name each coset by its least element.
  std::vector<int> rep(order, -1);
  for (int a = 0; a < order; ++a) {
    if (rep[a] >= 0)
      continue;
    std::vector<int> coset;
    for (int x : n.elements())
      coset.push_back(g->mul(a, x));
    int least = *std::min_element(coset.begin(), coset.end());
    for (int c : coset)
      rep[c] = least;
  }
  std::vector<int> reps;
  for (int a = 0; a < order; ++a)
    if (rep[a] == a)
      reps.push_back(a);
  std::sort(reps.begin(), reps.end());
  const int m = static_cast<int>(reps.size());
  std::vector<int> idx(order, -1);
  for (int i = 0; i < m; ++i)
    idx[reps[i]] = i;
  std::vector<int> table(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      table[static_cast<size_t>(i) * m + j] = idx[rep[g->mul(reps[i], reps[j])]];
  std::string name;
  if (!g->name().empty())
    name = g->name() + "/" + std::to_string(n.size());
  GroupPtr q = FiniteGroup::make(m, std::move(table), std::move(name));
  std::vector<int> proj(order);
  for (int a = 0; a < order; ++a)
    proj[a] = idx[rep[a]];
  GroupHom p = GroupHom::make(g, q, std::move(proj));
  return Quotient{std::move(q), std::move(p)};
}

DirectProduct direct_product(const GroupPtr &a, const GroupPtr &b) {
  const int na = a->order(), nb = b->order();
  const int n = na * nb;
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    const int xa = i / nb, xb = i % nb;
    for (int j = 0; j < n; ++j) {
      const int ya = j / nb, yb = j % nb;
      table[static_cast<size_t>(i) * n + j] = a->mul(xa, ya) * nb + b->mul(xb, yb);
    }
  }
  std::string name;
  if (!a->name().empty() && !b->name().empty())
    name = a->name() + "x" + b->name();
  GroupPtr p = FiniteGroup::make(n, std::move(table), std::move(name));
  std::vector<int> p1(n), p2(n), i1(na), i2(nb);
  for (int i = 0; i < n; ++i) {
    p1[i] = i / nb;
    p2[i] = i % nb;
  }
  for (int x = 0; x < na; ++x)
    i1[x] = x * nb;
  for (int y = 0; y < nb; ++y)
    i2[y] = y;
  return DirectProduct{p, GroupHom::make(p, a, std::move(p1)),
                       GroupHom::make(p, b, std::move(p2)),
                       GroupHom::make(a, p, std::move(i1)),
                       GroupHom::make(b, p, std::move(i2))};
}

Action Action::make(GroupPtr actor, GroupPtr target,
                    std::vector<std::vector<int>> assignment) {
  if (!actor || !target)
    throw Error(ErrorKind::BadInput, "action endpoints missing");
  if (assignment.size() != static_cast<size_t>(actor->order()))
    throw Error(ErrorKind::BadInput,
                "action needs one automorphism per actor element");
  const int nx = target->order();
  for (const auto &perm : assignment) {
    if (static_cast<int>(perm.size()) != nx || !is_hom_map(*target, *target, perm))
      throw Error(ErrorKind::BadInput,
                  "assigned map is not an endomorphism of the target");
    std::vector<char> seen(nx, 0);
    for (int v : perm) {
      if (seen[v])
        throw Error(ErrorKind::BadInput,
                    "assigned map is not a bijection");
      seen[v] = 1;
    }
  }
  for (int b = 0; b < actor->order(); ++b) {
    for (int c = 0; c < actor->order(); ++c) {
      const auto &pb = assignment[b];
      const auto &pc = assignment[c];
      const auto &pbc = assignment[actor->mul(b, c)];
      for (int x = 0; x < nx; ++x)
        if (pbc[x] != pb[pc[x]])
          throw Error(ErrorKind::BadInput,
                      "assignment does not respect actor multiplication");
    }
  }
  return Action(std::move(actor), std::move(target), std::move(assignment));
}

Action Action::trivial(GroupPtr actor, GroupPtr target) {
  std::vector<int> id(target->order());
  std::iota(id.begin(), id.end(), 0);
  return Action(std::move(actor), target,
                std::vector<std::vector<int>>(
                    static_cast<size_t>(actor ? actor->order() : 0), id));
}

bool Action::is_trivial() const {
  for (const auto &perm : assignment_)
    for (int x = 0; x < target_->order(); ++x)
      if (perm[x] != x)
        return false;
  return true;
}

bool Action::operator==(const Action &other) const {
  return same_group(actor_, other.actor_) &&
         same_group(target_, other.target_) &&
         assignment_ == other.assignment_;
}

namespace {

// Shared state for the generator-image backtracking behind all_homs,
// all_isomorphisms and automorphism_group.
struct HomSearch {
  const FiniteGroup &dom;
  const FiniteGroup &cod;
  bool order_exact;   // require ord(image) == ord(generator), for isos
  bool bijective;     // keep only bijections
  std::vector<int> gens;
  // Per level: the closure of the first k generators, in construction order,
  // with expr[i] = (j, l) meaning elem[i] = elem[j] * elem[l].  The generator
  // itself is marked (-2, position in gens); the identity is (-1, -1).
  struct Level {
    std::vector<int> elems;
    std::vector<std::pair<int, int>> expr;
  };
  std::vector<Level> levels;
  std::vector<std::vector<int>> results;

  explicit HomSearch(const FiniteGroup &d, const FiniteGroup &c,
                     bool exact, bool bij)
      : dom(d), cod(c), order_exact(exact), bijective(bij),
        gens(d.generators()) {
    build_levels();
  }

  void build_levels() {
    Level cur;
    cur.elems = {0};
    cur.expr = {{-1, -1}};
    levels.push_back(cur);
    for (size_t k = 0; k < gens.size(); ++k) {
      cur.elems.push_back(gens[k]);
      cur.expr.push_back({-2, static_cast<int>(k)});
      // close under products, recording one expression per new element
      std::vector<int> pos(dom.order(), -1);
      for (size_t i = 0; i < cur.elems.size(); ++i)
        pos[cur.elems[i]] = static_cast<int>(i);
      for (size_t i = 0; i < cur.elems.size(); ++i) {
        for (size_t j = 0; j < cur.elems.size(); ++j) {
          int p = dom.mul(cur.elems[i], cur.elems[j]);
          if (pos[p] < 0) {
            pos[p] = static_cast<int>(cur.elems.size());
            cur.elems.push_back(p);
            cur.expr.push_back({static_cast<int>(i), static_cast<int>(j)});
          }
        }
      }
      levels.push_back(cur);
    }
  }

  // Build images along the level's expressions and verify multiplicativity
  // on the level's subgroup.  img is indexed by dom element.
  bool try_level(size_t level, const std::vector<int> &gen_imgs,
                 std::vector<int> &img) {
    const Level &lv = levels[level];
    for (size_t i = 0; i < lv.elems.size(); ++i) {
      const auto &e = lv.expr[i];
      int value;
      if (e.first == -1)
        value = 0;
      else if (e.first == -2)
        value = gen_imgs[e.second];
      else
        value = cod.mul(img[lv.elems[e.first]], img[lv.elems[e.second]]);
      img[lv.elems[i]] = value;
    }
    for (size_t i = 0; i < lv.elems.size(); ++i) {
      for (size_t j = 0; j < lv.elems.size(); ++j) {
        int p = dom.mul(lv.elems[i], lv.elems[j]);
        if (img[p] != cod.mul(img[lv.elems[i]], img[lv.elems[j]]))
          return false;
      }
    }
    return true;
  }

  void run() {
    std::vector<int> gen_imgs(gens.size(), 0);
    std::vector<int> img(dom.order(), -1);
    if (!try_level(0, gen_imgs, img))
      return;
    recurse(0, gen_imgs, img);
  }

  void recurse(size_t k, std::vector<int> &gen_imgs, std::vector<int> &img) {
    if (k == gens.size()) {
      if (bijective) {
        std::vector<char> seen(cod.order(), 0);
        for (int v : img) {
          if (seen[v])
            return;
          seen[v] = 1;
        }
      }
      results.push_back(img);
      return;
    }
    const int go = dom.element_order(gens[k]);
    for (int c = 0; c < cod.order(); ++c) {
      const int co = cod.element_order(c);
      if (order_exact ? (co != go) : (go % co != 0))
        continue;
      gen_imgs[k] = c;
      if (try_level(k + 1, gen_imgs, img))
        recurse(k + 1, gen_imgs, img);
    }
  }
};

} // namespace

std::vector<std::vector<int>> all_homs(const GroupPtr &dom,
                                       const GroupPtr &cod) {
  HomSearch search(*dom, *cod, false, false);
  search.run();
  return std::move(search.results);
}

std::vector<std::vector<int>> all_isomorphisms(const GroupPtr &a,
                                               const GroupPtr &b) {
  if (a->order() != b->order())
    return {};
  HomSearch search(*a, *b, true, true);
  search.run();
  return std::move(search.results);
}

bool is_isomorphic(const GroupPtr &a, const GroupPtr &b) {
  // cheap invariants first
  if (a->order() != b->order())
    return false;
  std::vector<int> oa(a->order()), ob(b->order());
  for (int x = 0; x < a->order(); ++x)
    oa[x] = a->element_order(x);
  for (int x = 0; x < b->order(); ++x)
    ob[x] = b->element_order(x);
  std::sort(oa.begin(), oa.end());
  std::sort(ob.begin(), ob.end());
  if (oa != ob)
    return false;
  return !all_isomorphisms(a, b).empty();
}

AutGroup automorphism_group(const GroupPtr &g) {
  std::vector<std::vector<int>> autos = all_isomorphisms(g, g);
  std::sort(autos.begin(), autos.end());
  const int m = static_cast<int>(autos.size());
  std::map<std::vector<int>, int> idx;
  for (int i = 0; i < m; ++i)
    idx[autos[i]] = i;
  std::vector<int> table(static_cast<size_t>(m) * m);
  std::vector<int> comp(g->order());
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int x = 0; x < g->order(); ++x)
        comp[x] = autos[i][autos[j][x]];
      table[static_cast<size_t>(i) * m + j] = idx.at(comp);
    }
  }
  std::string name = g->name().empty() ? "" : "Aut(" + g->name() + ")";
  GroupPtr group = FiniteGroup::make(m, std::move(table), std::move(name));
  return AutGroup{g, std::move(group), std::move(autos)};
}

Action evaluation_action(const AutGroup &aut) {
  return Action::make(aut.group, aut.of, aut.autos);
}

} // namespace grpd
