#pragma once

#include <vector>

#include "looplab/loop_table.hpp"

namespace looplab {

/// Sorted, duplicate-free set of element indices (subloops, nuclei, adjoint
/// sets, cosets). Plain vector so callers can iterate and compare directly.
using ElementSet = std::vector<Elem>;

bool set_contains(const ElementSet& s, Elem x);
bool is_sorted_set(const ElementSet& s);

/// Associator [a,b,c]: the unique x with (ab)c = (a(bc))x.
/// Equals the identity iff the triple associates.
Elem associator(const LoopTable& t, Elem a, Elem b, Elem c);

/// Commutator [x,y]: the unique c with xy = (yx)c.
/// Equals the identity iff the pair commutes.
Elem commutator(const LoopTable& t, Elem x, Elem y);

enum class NucleusKind { Left, Middle, Right, Full };

/// Left nucleus {a : [a,x,y]=e for all x,y}, middle/right analogously;
/// Full is the intersection of the three.
ElementSet nucleus(const LoopTable& t, NucleusKind kind = NucleusKind::Full);

/// Bruck adjoint A' = {x : [a,x,g] = e for all a in A, g in G}. The adjoint
/// variable sits in the middle associator slot; this is not symmetrized.
/// Throws Error(EmptySet) when A is empty.
ElementSet adjoint(const LoopTable& t, const ElementSet& a);

/// The set d_{x,y} = {z : [z,y,x] = e} from the fixed-point lemma. Note the
/// slot order: z first, then y, then x.
ElementSet partial_set(const LoopTable& t, Elem x, Elem y);

/// Smallest set containing gens and the identity, closed under mul, left_div
/// and right_div. Empty gens gives {e}.
ElementSet subloop_closure(const LoopTable& t, const ElementSet& gens);

bool is_subloop(const LoopTable& t, const ElementSet& s);

/// Every subloop of t. Seeds with closures of all subsets of size <= 3, then
/// grows each found subloop by one element until a fixpoint; complete at desk
/// scale. Result sorted by (size, lexicographic). Throws Error(OrderTooLarge)
/// when t.order() > max_order.
std::vector<ElementSet> all_subloops(const LoopTable& t, int max_order = 16);

enum class CosetSide { Left, Right };

struct CosetDecomposition {
  std::vector<ElementSet> cosets;  // distinct xH (or Hx), by first occurrence
  bool partitions = false;         // true iff the cosets tile G
  int index = 0;                   // n / |H| when partitioning, else 0
};

/// Distinct cosets of a subloop. Throws Error(NotASubloop).
CosetDecomposition cosets(const LoopTable& t, const ElementSet& h, CosetSide side);

/// Normality via set equations: xH = Hx, (Hx)y = H(xy), y(xH) = (yx)H for all
/// x, y. Throws Error(NotASubloop).
bool is_normal(const LoopTable& t, const ElementSet& h);

struct Quotient {
  LoopTable table;
  std::vector<ElementSet> cosets;  // coset of index i, as elements of t
  std::vector<int> coset_of;      // element -> coset index
};

/// Cayley table on cosets, with well-definedness verified (coset products
/// independent of representatives, result a loop). Throws Error(NotASubloop)
/// or Error(NotNormal).
Quotient quotient(const LoopTable& t, const ElementSet& h);

struct PseudoAutomorphism {
  Perm map;
  Elem companion;
};

/// The translation composite L(x,y): z -> (yx) \ (y(xz)), paired with
/// companion [y,x]. Applies L_x first, then L_y, then L_{yx}^{-1}; this is
/// the order under which the fixed-point lemma holds (the mirror order fails
/// it, see the regression test).
PseudoAutomorphism pseudo_L(const LoopTable& t, Elem x, Elem y);

/// Right pseudo-automorphism law: f is a bijection and
/// f(a) * (f(b) * c) = f(a*b) * c for all a, b.
bool is_pseudo_automorphism(const LoopTable& t, const Perm& f, Elem companion);

}  // namespace looplab
