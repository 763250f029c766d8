#include "looplab/probability.hpp"

#include "looplab/structure.hpp"

namespace looplab {

Fraction p_assoc(const LoopTable& t) {
  const int n = t.order();
  std::int64_t count = 0;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (t.mul(t.mul(x, y), z) == t.mul(x, t.mul(y, z))) ++count;
  return Fraction(count, static_cast<std::int64_t>(n) * n * n);
}

TripleCountBreakdown p_assoc_decomposed(const LoopTable& t) {
  const int n = t.order();
  const ElementSet nuc = nucleus(t, NucleusKind::Full);
  TripleCountBreakdown out;
  out.total = static_cast<std::int64_t>(n) * n * n;
  out.case1 = static_cast<std::int64_t>(nuc.size()) * n * n;
  for (Elem x = 0; x < n; ++x) {
    if (set_contains(nuc, x)) continue;
    const ElementSet adj = adjoint(t, {x});
    for (Elem y = 0; y < n; ++y) {
      if (set_contains(adj, y)) {
        // [x,y,g] = e for every g, so all n completions associate.
        out.case2 += n;
      } else {
        for (Elem z = 0; z < n; ++z)
          if (associator(t, x, y, z) == t.identity()) ++out.case3;
      }
    }
  }
  return out;
}

Fraction p_comm(const LoopTable& t) {
  const int n = t.order();
  std::int64_t count = 0;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (t.mul(x, y) == t.mul(y, x)) ++count;
  return Fraction(count, static_cast<std::int64_t>(n) * n);
}

Fraction moufang_bound_value(const LoopTable& t) {
  const auto nuc = static_cast<std::int64_t>(nucleus(t).size());
  return Fraction(nuc, t.order()) * Fraction(3, 8) + Fraction(5, 8);
}

Fraction cc_bound_value(const LoopTable& t) {
  const auto nuc = static_cast<std::int64_t>(nucleus(t).size());
  return Fraction(nuc, t.order()) * Fraction(1, 4) + Fraction(3, 4);
}

}  // namespace looplab
