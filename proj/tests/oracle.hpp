#pragma once

// Independent generate-and-test oracle for small loop enumeration. Kept free
// of library code on purpose: tables are plain nested vectors, Latin squares
// come from brute force over rows-as-permutations, and isomorphism is a brute
// scan over identity-fixing bijections. Anything the enumerator gets wrong,
// this should get right by sheer lack of cleverness. Usable up to order 6.

#include <algorithm>
#include <numeric>
#include <vector>

namespace oracle {

using Table = std::vector<std::vector<int>>;

// All normalized Latin squares of order n: row 0 and column 0 are 0..n-1.
inline std::vector<Table> normalized_latin_squares(int n) {
  std::vector<Table> out;
  Table t(n, std::vector<int>(n, 0));
  std::iota(t[0].begin(), t[0].end(), 0);

  auto column_ok = [&](int upto_row, const std::vector<int>& row) {
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < upto_row; ++i)
        if (t[i][j] == row[j]) return false;
    return true;
  };

  std::vector<std::vector<int>> slots;  // reused permutation buffer per depth
  auto fill = [&](auto&& self, int r) -> void {
    if (r == n) {
      out.push_back(t);
      return;
    }
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
      if (v != r) rest.push_back(v);
    std::sort(rest.begin(), rest.end());
    do {
      std::vector<int> row(n);
      row[0] = r;
      for (int j = 1; j < n; ++j) row[j] = rest[j - 1];
      if (!column_ok(r, row)) continue;
      t[r] = row;
      self(self, r + 1);
    } while (std::next_permutation(rest.begin(), rest.end()));
  };
  if (n == 1) return {Table{{0}}};
  fill(fill, 1);
  return out;
}

// Isomorphism over bijections fixing 0 (normalized tables have identity 0,
// and any isomorphism maps identity to identity).
inline bool isomorphic(const Table& a, const Table& b) {
  const int n = static_cast<int>(a.size());
  std::vector<int> f(n);
  f[0] = 0;
  std::vector<int> rest(n - 1);
  std::iota(rest.begin(), rest.end(), 1);
  do {
    for (int i = 1; i < n; ++i) f[i] = rest[i - 1];
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        ok = f[a[x][y]] == b[f[x]][f[y]];
    if (ok) return true;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return false;
}

// Partition into isomorphism classes; each class lists indices into `ts` in
// increasing order, classes ordered by first member.
inline std::vector<std::vector<int>> iso_classes(const std::vector<Table>& ts) {
  std::vector<std::vector<int>> classes;
  std::vector<bool> taken(ts.size(), false);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (taken[i]) continue;
    std::vector<int> cls{static_cast<int>(i)};
    taken[i] = true;
    for (std::size_t j = i + 1; j < ts.size(); ++j)
      if (!taken[j] && isomorphic(ts[i], ts[j])) {
        cls.push_back(static_cast<int>(j));
        taken[j] = true;
      }
    classes.push_back(std::move(cls));
  }
  return classes;
}

}  // namespace oracle
