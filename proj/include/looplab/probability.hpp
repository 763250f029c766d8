#pragma once

#include <cstdint>

#include "looplab/fraction.hpp"
#include "looplab/loop_table.hpp"

namespace looplab {

/// Counts of associating triples split into the three disjoint cases of the
/// bound proofs:
///   case1: x in the nucleus (every such triple associates),
///   case2: x outside the nucleus, y in the adjoint {x}' (again all z work),
///   case3: x outside, y outside {x}', z completing an associating triple.
/// The three cases partition the associating triples of any loop, so
/// case1 + case2 + case3 over n^3 must reproduce p_assoc exactly.
struct TripleCountBreakdown {
  std::int64_t case1 = 0;
  std::int64_t case2 = 0;
  std::int64_t case3 = 0;
  std::int64_t total = 0;  // n^3

  Fraction fraction() const { return Fraction(case1 + case2 + case3, total); }
};

/// Probability that a uniform triple associates: #{(x,y,z) : (xy)z = x(yz)}
/// over n^3, reduced. Direct brute-force scan.
Fraction p_assoc(const LoopTable& t);

/// The same probability computed along the three-case decomposition, as an
/// independent code path from the brute-force scan.
TripleCountBreakdown p_assoc_decomposed(const LoopTable& t);

/// Probability that a uniform pair commutes: #{(x,y) : xy = yx} over n^2.
Fraction p_comm(const LoopTable& t);

/// Per-loop upper bounds from the two theorems, as functions of the nucleus
/// density |N|/n: Moufang form |N|/n * 3/8 + 5/8, CC form |N|/n * 1/4 + 3/4.
Fraction moufang_bound_value(const LoopTable& t);
Fraction cc_bound_value(const LoopTable& t);

}  // namespace looplab
