#include "looplab/loop_table.hpp"

#include <algorithm>
#include <numeric>

#include "looplab/structure.hpp"

namespace looplab {

MagmaTable::MagmaTable(int order, std::vector<Elem> cells) : n_(order), cells_(std::move(cells)) {
  if (n_ < 1) throw Error(Error::Kind::InvalidOrder, "table order must be >= 1");
  if (cells_.size() != static_cast<std::size_t>(n_) * n_)
    throw Error(Error::Kind::Precondition, "cell count does not match order");
  for (int r = 0; r < n_; ++r) {
    for (int c = 0; c < n_; ++c) {
      const Elem v = cells_[static_cast<std::size_t>(r) * n_ + c];
      if (v < 0 || v >= n_)
        throw Error(Error::Kind::OutOfRangeEntry,
                    "entry " + std::to_string(v) + " at row " + std::to_string(r) + ", column " +
                        std::to_string(c) + " out of range",
                    r, c);
    }
  }
}

MagmaTable MagmaTable::from_rows(const std::vector<std::vector<Elem>>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<Elem> cells;
  cells.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n)
      throw Error(Error::Kind::Precondition, "ragged row in table");
    cells.insert(cells.end(), row.begin(), row.end());
  }
  return MagmaTable(n, std::move(cells));
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::Magma: return "magma";
    case Classification::Quasigroup: return "quasigroup";
    case Classification::Loop: return "loop";
  }
  return "?";
}

std::string ValidationIssue::message() const {
  switch (kind) {
    case Kind::RowRepeat:
      return "row " + std::to_string(index) + " repeats value " + std::to_string(value);
    case Kind::ColRepeat:
      return "column " + std::to_string(index) + " repeats value " + std::to_string(value);
    case Kind::NoIdentity:
      return "no two-sided identity element";
  }
  return "?";
}

LoopTable::LoopTable(int n, std::vector<Elem> cells, Elem identity)
    : n_(n), identity_(identity), cells_(std::move(cells)) {
  ldiv_.assign(static_cast<std::size_t>(n_) * n_, 0);
  rdiv_.assign(static_cast<std::size_t>(n_) * n_, 0);
  for (Elem a = 0; a < n_; ++a) {
    for (Elem x = 0; x < n_; ++x) {
      const Elem ax = cells_[static_cast<std::size_t>(a) * n_ + x];
      const Elem xa = cells_[static_cast<std::size_t>(x) * n_ + a];
      ldiv_[static_cast<std::size_t>(a) * n_ + ax] = x;  // a * x = ax
      rdiv_[static_cast<std::size_t>(a) * n_ + xa] = x;  // x * a = xa
    }
  }
}

Validation validate(const MagmaTable& m) {
  const int n = m.order();
  Validation out;

  bool latin = true;
  std::vector<char> seen(n);
  for (int r = 0; r < n && latin; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int c = 0; c < n; ++c) {
      const Elem v = m.at(r, c);
      if (seen[v]) {
        out.issues.push_back({ValidationIssue::Kind::RowRepeat, r, v});
        latin = false;
        break;
      }
      seen[v] = 1;
    }
  }
  for (int c = 0; c < n && latin; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int r = 0; r < n; ++r) {
      const Elem v = m.at(r, c);
      if (seen[v]) {
        out.issues.push_back({ValidationIssue::Kind::ColRepeat, c, v});
        latin = false;
        break;
      }
      seen[v] = 1;
    }
  }
  if (!latin) {
    out.classification = Classification::Magma;
    return out;
  }

  // Latin; look for a two-sided identity. Uniqueness is automatic: if e and
  // e' are both identities then e = e*e' = e'.
  std::optional<Elem> identity;
  for (Elem e = 0; e < n; ++e) {
    bool ok = true;
    for (Elem x = 0; x < n; ++x) {
      if (m.at(e, x) != x || m.at(x, e) != x) {
        ok = false;
        break;
      }
    }
    if (ok) {
      identity = e;
      break;
    }
  }
  if (!identity) {
    out.classification = Classification::Quasigroup;
    out.issues.push_back({ValidationIssue::Kind::NoIdentity});
    return out;
  }
  out.classification = Classification::Loop;
  out.loop = LoopTable(n, m.cells(), *identity);
  return out;
}

LoopTable LoopTable::require(const MagmaTable& m) {
  Validation v = validate(m);
  if (!v.loop) {
    std::string why = v.issues.empty() ? "not a loop" : v.issues.front().message();
    throw Error(Error::Kind::NotALoop, "table is not a loop: " + why);
  }
  return *std::move(v.loop);
}

std::pair<Perm, Perm> translations(const LoopTable& t, Elem x) {
  const int n = t.order();
  Perm left(n), right(n);
  for (Elem y = 0; y < n; ++y) {
    left[y] = t.mul(x, y);
    right[y] = t.mul(y, x);
  }
  return {std::move(left), std::move(right)};
}

std::optional<Elem> two_sided_inverse(const LoopTable& t, Elem x) {
  const Elem e = t.identity();
  const Elem li = t.left_div(x, e);   // x * li = e
  const Elem ri = t.right_div(x, e);  // ri * x = e
  if (li != ri) return std::nullopt;
  return li;
}

namespace {

// |<x>| per element; an isomorphism invariant used to prune image candidates.
std::vector<int> order_profile(const LoopTable& t) {
  std::vector<int> profile(t.order());
  for (Elem x = 0; x < t.order(); ++x)
    profile[x] = static_cast<int>(subloop_closure(t, {x}).size());
  return profile;
}

struct IsoSearch {
  const LoopTable& a;
  const LoopTable& b;
  std::vector<int> profile_a;
  std::vector<int> profile_b;
  std::vector<Elem> map;        // a -> b, -1 unassigned
  std::vector<char> used;      // image taken in b
  std::vector<Elem> assigned;  // a-elements with an image, in assignment order

  // Assigns map[x] = u and propagates products against everything already
  // assigned. Records all new assignments in `trail` so the caller can undo.
  bool assign(Elem x, Elem u, std::vector<Elem>& trail) {
    if (profile_a[x] != profile_b[u]) return false;
    map[x] = u;
    used[u] = 1;
    trail.push_back(x);
    assigned.push_back(x);
    for (std::size_t qi = trail.size() - 1; qi < trail.size(); ++qi) {
      const Elem p = trail[qi];
      // `assigned` grows while we propagate; index-based loop on purpose.
      for (std::size_t ai = 0; ai < assigned.size(); ++ai) {
        const Elem q = assigned[ai];
        const Elem prods[2] = {a.mul(p, q), a.mul(q, p)};
        const Elem images[2] = {b.mul(map[p], map[q]), b.mul(map[q], map[p])};
        for (int k = 0; k < 2; ++k) {
          const Elem w = prods[k], v = images[k];
          if (map[w] == -1) {
            if (used[v] || profile_a[w] != profile_b[v]) return false;
            map[w] = v;
            used[v] = 1;
            trail.push_back(w);
            assigned.push_back(w);
          } else if (map[w] != v) {
            return false;
          }
        }
      }
    }
    return true;
  }

  void undo(const std::vector<Elem>& trail) {
    for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
      used[map[*it]] = 0;
      map[*it] = -1;
    }
    assigned.resize(assigned.size() - trail.size());
  }

  bool search() {
    Elem x = -1;
    for (Elem i = 0; i < a.order(); ++i) {
      if (map[i] == -1) {
        x = i;
        break;
      }
    }
    if (x == -1) return true;
    for (Elem u = 0; u < b.order(); ++u) {
      if (used[u]) continue;
      std::vector<Elem> trail;
      if (assign(x, u, trail) && search()) return true;
      undo(trail);
    }
    return false;
  }
};

}  // namespace

std::optional<Perm> isomorphic(const LoopTable& a, const LoopTable& b) {
  if (a.order() != b.order())
    throw Error(Error::Kind::OrderMismatch, "loops have different orders");
  IsoSearch s{a, b, order_profile(a), order_profile(b),
              std::vector<Elem>(a.order(), -1), std::vector<char>(a.order(), 0), {}};
  std::vector<Elem> trail;
  if (!s.assign(a.identity(), b.identity(), trail)) return std::nullopt;
  if (!s.search()) return std::nullopt;
  return s.map;
}

}  // namespace looplab
