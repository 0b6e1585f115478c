#include "grpd/lattice.hpp"

#include <algorithm>
#include <set>

namespace grpd {

namespace {

void require_same_parent(const Subgroup &a, const Subgroup &b,
                         const char *what) {
  if (!same_group(a.parent(), b.parent()))
    throw Error(ErrorKind::BadInput,
                std::string(what) + ": subgroups have different parents");
}

} // namespace

Subgroup join(const Subgroup &a, const Subgroup &b) {
  require_same_parent(a, b, "join");
  std::vector<int> seed(a.elements());
  seed.insert(seed.end(), b.elements().begin(), b.elements().end());
  return Subgroup::generated(a.parent(), seed);
}

Subgroup meet(const Subgroup &a, const Subgroup &b) {
  require_same_parent(a, b, "meet");
  std::vector<int> common;
  std::set_intersection(a.elements().begin(), a.elements().end(),
                        b.elements().begin(), b.elements().end(),
                        std::back_inserter(common));
  return Subgroup::make(a.parent(), std::move(common));
}

Subgroup normal_closure(const Subgroup &a) {
  const auto &g = a.parent();
  std::vector<int> seed;
  seed.reserve(a.elements().size() * g->order());
  for (int x : a.elements())
    for (int c = 0; c < g->order(); ++c)
      seed.push_back(g->conj(c, x));
  return Subgroup::generated(g, seed);
}

Subgroup huq_commutator(const Subgroup &a, const Subgroup &b) {
  require_same_parent(a, b, "huq_commutator");
  const auto &g = a.parent();
  std::vector<int> comms;
  for (int x : a.elements())
    for (int y : b.elements())
      comms.push_back(g->comm(x, y));
  return normal_closure(Subgroup::generated(g, comms));
}

std::optional<GroupHom> cooperate(const GroupHom &f, const GroupHom &g) {
  if (!same_group(f.cod(), g.cod()))
    throw Error(ErrorKind::BadInput, "cooperate: codomains differ");
  const auto &b = f.cod();
  DirectProduct prod = direct_product(f.dom(), g.dom());
  const int nc = g.dom()->order();
  std::vector<int> map(prod.group->order());
  for (int i = 0; i < prod.group->order(); ++i)
    map[i] = b->mul(f(i / nc), g(i % nc));
  if (!is_hom_map(*prod.group, *b, map))
    return std::nullopt;
  return GroupHom::make(prod.group, b, std::move(map));
}

Subgroup centralizer(const GroupHom &f) { return centralizer(image(f)); }

Subgroup centralizer(const Subgroup &s) {
  const auto &g = s.parent();
  std::vector<int> elems;
  for (int c = 0; c < g->order(); ++c) {
    bool central = true;
    for (int x : s.elements()) {
      if (g->mul(c, x) != g->mul(x, c)) {
        central = false;
        break;
      }
    }
    if (central)
      elems.push_back(c);
  }
  return Subgroup::make(g, std::move(elems));
}

Subgroup normalizer(const Subgroup &a) {
  const auto &g = a.parent();
  std::vector<int> elems;
  for (int c = 0; c < g->order(); ++c) {
    bool normalizes = true;
    for (int x : a.elements()) {
      if (!a.contains(g->conj(c, x))) {
        normalizes = false;
        break;
      }
    }
    if (normalizes)
      elems.push_back(c);
  }
  return Subgroup::make(g, std::move(elems));
}

Subgroup preimage(const GroupHom &f, const Subgroup &s) {
  if (!same_group(f.cod(), s.parent()))
    throw Error(ErrorKind::BadInput, "preimage: subgroup lives elsewhere");
  std::vector<int> elems;
  for (int x = 0; x < f.dom()->order(); ++x)
    if (s.contains(f(x)))
      elems.push_back(x);
  return Subgroup::make(f.dom(), std::move(elems));
}

std::vector<Subgroup> all_subgroups(const GroupPtr &g) {
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue;
  std::vector<int> triv = {0};
  seen.insert(triv);
  queue.push_back(triv);
  for (size_t q = 0; q < queue.size(); ++q) {
    const std::vector<int> current = queue[q];
    for (int x = 1; x < g->order(); ++x) {
      if (std::binary_search(current.begin(), current.end(), x))
        continue;
      std::vector<int> seed(current);
      seed.push_back(x);
      Subgroup ext = Subgroup::generated(g, seed);
      if (seen.insert(ext.elements()).second)
        queue.push_back(ext.elements());
    }
  }
  std::vector<std::vector<int>> sorted(seen.begin(), seen.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const std::vector<int> &a, const std::vector<int> &b) {
              if (a.size() != b.size())
                return a.size() < b.size();
              return a < b;
            });
  std::vector<Subgroup> out;
  out.reserve(sorted.size());
  for (auto &elems : sorted)
    out.push_back(Subgroup::make(g, std::move(elems)));
  return out;
}

std::vector<Subgroup> normal_subgroups(const GroupPtr &g) {
  std::vector<Subgroup> out;
  for (auto &s : all_subgroups(g))
    if (s.is_normal())
      out.push_back(std::move(s));
  return out;
}

} // namespace grpd
