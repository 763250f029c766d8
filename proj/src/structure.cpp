#include "looplab/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "looplab/error.hpp"

namespace looplab {

bool set_contains(const ElementSet& s, Elem x) {
  return std::binary_search(s.begin(), s.end(), x);
}

bool is_sorted_set(const ElementSet& s) {
  return std::is_sorted(s.begin(), s.end()) &&
         std::adjacent_find(s.begin(), s.end()) == s.end();
}

Elem associator(const LoopTable& t, Elem a, Elem b, Elem c) {
  const Elem left = t.mul(t.mul(a, b), c);
  const Elem right = t.mul(a, t.mul(b, c));
  return t.left_div(right, left);
}

Elem commutator(const LoopTable& t, Elem x, Elem y) {
  return t.left_div(t.mul(y, x), t.mul(x, y));
}

namespace {

bool in_left_nucleus(const LoopTable& t, Elem a) {
  const int n = t.order();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (t.mul(t.mul(a, x), y) != t.mul(a, t.mul(x, y))) return false;
  return true;
}

bool in_middle_nucleus(const LoopTable& t, Elem a) {
  const int n = t.order();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (t.mul(t.mul(x, a), y) != t.mul(x, t.mul(a, y))) return false;
  return true;
}

bool in_right_nucleus(const LoopTable& t, Elem a) {
  const int n = t.order();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (t.mul(t.mul(x, y), a) != t.mul(x, t.mul(y, a))) return false;
  return true;
}

}  // namespace

ElementSet nucleus(const LoopTable& t, NucleusKind kind) {
  ElementSet out;
  for (Elem a = 0; a < t.order(); ++a) {
    bool ok = false;
    switch (kind) {
      case NucleusKind::Left: ok = in_left_nucleus(t, a); break;
      case NucleusKind::Middle: ok = in_middle_nucleus(t, a); break;
      case NucleusKind::Right: ok = in_right_nucleus(t, a); break;
      case NucleusKind::Full:
        ok = in_left_nucleus(t, a) && in_middle_nucleus(t, a) &&
             in_right_nucleus(t, a);
        break;
    }
    if (ok) out.push_back(a);
  }
  return out;
}

ElementSet adjoint(const LoopTable& t, const ElementSet& a) {
  if (a.empty())
    throw Error(Error::Kind::EmptySet, "adjoint of the empty set is undefined");
  const int n = t.order();
  ElementSet out;
  for (Elem x = 0; x < n; ++x) {
    bool ok = true;
    for (Elem ai : a) {
      for (Elem g = 0; g < n; ++g) {
        if (associator(t, ai, x, g) != t.identity()) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) out.push_back(x);
  }
  return out;
}

ElementSet partial_set(const LoopTable& t, Elem x, Elem y) {
  ElementSet out;
  for (Elem z = 0; z < t.order(); ++z)
    if (associator(t, z, y, x) == t.identity()) out.push_back(z);
  return out;
}

ElementSet subloop_closure(const LoopTable& t, const ElementSet& gens) {
  const int n = t.order();
  std::vector<char> in(n, 0);
  std::vector<Elem> queue;
  auto add = [&](Elem x) {
    if (!in[x]) {
      in[x] = 1;
      queue.push_back(x);
    }
  };
  add(t.identity());
  for (Elem g : gens) {
    if (g < 0 || g >= n)
      throw Error(Error::Kind::OutOfRangeEntry,
                  "generator " + std::to_string(g) + " out of range");
    add(g);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Elem a = queue[head];
    // Pair a against everything found so far, including itself.
    for (std::size_t j = 0; j <= head; ++j) {
      const Elem b = queue[j];
      add(t.mul(a, b));
      add(t.mul(b, a));
      add(t.left_div(a, b));
      add(t.left_div(b, a));
      add(t.right_div(a, b));
      add(t.right_div(b, a));
    }
  }
  ElementSet out;
  for (Elem x = 0; x < n; ++x)
    if (in[x]) out.push_back(x);
  return out;
}

bool is_subloop(const LoopTable& t, const ElementSet& s) {
  if (s.empty() || !is_sorted_set(s)) return false;
  if (s.front() < 0 || s.back() >= t.order()) return false;
  if (!set_contains(s, t.identity())) return false;
  for (Elem a : s)
    for (Elem b : s) {
      if (!set_contains(s, t.mul(a, b))) return false;
      if (!set_contains(s, t.left_div(a, b))) return false;
      if (!set_contains(s, t.right_div(a, b))) return false;
    }
  return true;
}

std::vector<ElementSet> all_subloops(const LoopTable& t, int max_order) {
  const int n = t.order();
  if (n > max_order)
    throw Error(Error::Kind::OrderTooLarge,
                "all_subloops supports order <= " + std::to_string(max_order) +
                    ", got " + std::to_string(n));
  std::set<ElementSet> found;
  // Closures of all generating sets of size <= 3.
  found.insert(subloop_closure(t, {}));
  for (Elem a = 0; a < n; ++a) {
    found.insert(subloop_closure(t, {a}));
    for (Elem b = a + 1; b < n; ++b) {
      found.insert(subloop_closure(t, {a, b}));
      for (Elem c = b + 1; c < n; ++c)
        found.insert(subloop_closure(t, {a, b, c}));
    }
  }
  // Grow every known subloop by one outside element until nothing new appears.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<ElementSet> snapshot(found.begin(), found.end());
    for (const ElementSet& h : snapshot) {
      for (Elem x = 0; x < n; ++x) {
        if (set_contains(h, x)) continue;
        ElementSet gens = h;
        gens.push_back(x);
        ElementSet grown = subloop_closure(t, gens);
        if (found.insert(std::move(grown)).second) grew = true;
      }
    }
  }
  std::vector<ElementSet> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

namespace {

ElementSet translate(const LoopTable& t, Elem x, const ElementSet& h,
                     CosetSide side) {
  ElementSet out;
  out.reserve(h.size());
  for (Elem a : h)
    out.push_back(side == CosetSide::Left ? t.mul(x, a) : t.mul(a, x));
  std::sort(out.begin(), out.end());
  return out;
}

void require_subloop(const LoopTable& t, const ElementSet& h,
                     const char* what) {
  if (!is_subloop(t, h))
    throw Error(Error::Kind::NotASubloop,
                std::string(what) + ": argument is not a subloop");
}

}  // namespace

CosetDecomposition cosets(const LoopTable& t, const ElementSet& h,
                          CosetSide side) {
  require_subloop(t, h, "cosets");
  const int n = t.order();
  CosetDecomposition out;
  std::set<ElementSet> seen;
  std::vector<char> covered(n, 0);
  for (Elem x = 0; x < n; ++x) {
    ElementSet c = translate(t, x, h, side);
    if (seen.insert(c).second) {
      for (Elem e : c) covered[e] = 1;
      out.cosets.push_back(std::move(c));
    }
  }
  const std::size_t tile = out.cosets.size() * h.size();
  const bool all = std::all_of(covered.begin(), covered.end(),
                               [](char c) { return c != 0; });
  out.partitions = all && tile == static_cast<std::size_t>(n);
  out.index = out.partitions ? n / static_cast<int>(h.size()) : 0;
  return out;
}

bool is_normal(const LoopTable& t, const ElementSet& h) {
  require_subloop(t, h, "is_normal");
  const int n = t.order();
  for (Elem x = 0; x < n; ++x) {
    if (translate(t, x, h, CosetSide::Left) !=
        translate(t, x, h, CosetSide::Right))
      return false;
  }
  for (Elem x = 0; x < n; ++x) {
    const ElementSet hx = translate(t, x, h, CosetSide::Right);
    const ElementSet xh = translate(t, x, h, CosetSide::Left);
    for (Elem y = 0; y < n; ++y) {
      // (Hx)y == H(xy)
      ElementSet lhs;
      lhs.reserve(h.size());
      for (Elem e : hx) lhs.push_back(t.mul(e, y));
      std::sort(lhs.begin(), lhs.end());
      if (lhs != translate(t, t.mul(x, y), h, CosetSide::Right)) return false;
      // y(xH) == (yx)H
      ElementSet lhs2;
      lhs2.reserve(h.size());
      for (Elem e : xh) lhs2.push_back(t.mul(y, e));
      std::sort(lhs2.begin(), lhs2.end());
      if (lhs2 != translate(t, t.mul(y, x), h, CosetSide::Left)) return false;
    }
  }
  return true;
}

Quotient quotient(const LoopTable& t, const ElementSet& h) {
  require_subloop(t, h, "quotient");
  if (!is_normal(t, h))
    throw Error(Error::Kind::NotNormal, "quotient: subloop is not normal");
  const int n = t.order();
  CosetDecomposition dec = cosets(t, h, CosetSide::Left);
  if (!dec.partitions)
    throw Error(Error::Kind::NotNormal,
                "quotient: cosets do not partition the loop");
  const int m = static_cast<int>(dec.cosets.size());
  std::vector<int> coset_of(n, -1);
  for (int i = 0; i < m; ++i)
    for (Elem e : dec.cosets[i]) coset_of[e] = i;
  std::vector<Elem> cells(static_cast<std::size_t>(m) * m, -1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      int expect = -1;
      for (Elem a : dec.cosets[i]) {
        for (Elem b : dec.cosets[j]) {
          const int k = coset_of[t.mul(a, b)];
          if (expect == -1) expect = k;
          if (k != expect)
            throw Error(Error::Kind::NotNormal,
                        "quotient: product not well defined on cosets");
        }
      }
      cells[static_cast<std::size_t>(i) * m + j] = expect;
    }
  }
  LoopTable q = LoopTable::require(MagmaTable(m, std::move(cells)));
  return Quotient{std::move(q), std::move(dec.cosets), std::move(coset_of)};
}

PseudoAutomorphism pseudo_L(const LoopTable& t, Elem x, Elem y) {
  const int n = t.order();
  const Elem yx = t.mul(y, x);
  Perm map(n);
  for (Elem z = 0; z < n; ++z)
    map[z] = t.left_div(yx, t.mul(y, t.mul(x, z)));
  return PseudoAutomorphism{std::move(map), commutator(t, y, x)};
}

bool is_pseudo_automorphism(const LoopTable& t, const Perm& f, Elem companion) {
  const int n = t.order();
  if (static_cast<int>(f.size()) != n) return false;
  std::vector<char> hit(n, 0);
  for (Elem v : f) {
    if (v < 0 || v >= n || hit[v]) return false;
    hit[v] = 1;
  }
  if (companion < 0 || companion >= n) return false;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (t.mul(f[a], t.mul(f[b], companion)) !=
          t.mul(f[t.mul(a, b)], companion))
        return false;
  return true;
}

}  // namespace looplab
