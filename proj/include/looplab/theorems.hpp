#pragma once

#include <optional>
#include <string>
#include <vector>

#include "looplab/fraction.hpp"
#include "looplab/loop_table.hpp"

namespace looplab {

/// Stable claim identifiers, serialized as MOUFANG_BOUND, CC_BOUND, INDEX_8,
/// TWO_GEN, MOUFANG_THM, LAGRANGE, FIXED_POINT.
enum class ClaimId {
  MoufangBound,
  CcBound,
  Index8,
  TwoGen,
  MoufangThm,
  Lagrange,
  FixedPoint,
};

std::string to_string(ClaimId id);
std::optional<ClaimId> claim_from_string(const std::string& s);
const std::vector<ClaimId>& all_claims();

/// Verdict of one claim against one loop. `verified` is meaningful only when
/// `applicable`; an applicable-but-unverified verdict carries a concrete
/// counterexample witness. Evidence always states the decisive numbers so a
/// rerun is comparable line by line.
struct TheoremVerdict {
  ClaimId id;
  bool applicable = false;
  bool verified = false;
  std::string evidence;
  std::optional<std::vector<Elem>> witness;

  bool falsified() const { return applicable && !verified; }
};

/// [G,G] lies in the nucleus: commutator(x,y) is nuclear for every pair.
/// Checked as the set condition; generating a subloop from the commutators
/// adds nothing because the nucleus is itself a subloop.
bool has_nuclear_commutators(const LoopTable& t);

/// p_assoc <= 43/64 for nonassociative Moufang loops with nuclear
/// commutators.
TheoremVerdict verify_moufang_bound(const LoopTable& t);

/// p_assoc <= 7/8 for nonassociative CC loops.
TheoremVerdict verify_cc_bound(const LoopTable& t);

/// [G : nucleus] >= 8 for nonassociative Moufang loops.
TheoremVerdict verify_index_corollary(const LoopTable& t);

/// Contrapositive of the two-generator lemma: a nonassociative Moufang loop
/// has no 2-generated quotient by a normal nuclear subloop.
TheoremVerdict verify_two_generator_lemma(const LoopTable& t);

/// Moufang's theorem: every associating triple generates an associative
/// subloop. Throws Error(OrderTooLarge) above max_order.
TheoremVerdict verify_moufang_theorem(const LoopTable& t, int max_order = 16);

/// Lagrange property for Moufang and CC loops: every subloop order divides
/// the loop order. Throws Error(OrderTooLarge) above max_order.
TheoremVerdict verify_lagrange(const LoopTable& t, int max_order = 16);

/// The fixed-point lemma for L(x,y) under nuclear commutators: the map is a
/// pseudo-automorphism with companion [y,x], its fixed points are exactly
/// partial_set(x,y), that set is a subloop, and L(x,y)(z)*[z,y,x] = z.
TheoremVerdict verify_fixed_point_lemma(const LoopTable& t);

TheoremVerdict verify_claim(const LoopTable& t, ClaimId id);
std::vector<TheoremVerdict> verify_all(const LoopTable& t);

}  // namespace looplab
