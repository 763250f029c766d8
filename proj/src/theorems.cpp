#include "looplab/theorems.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <sstream>

#include "looplab/error.hpp"
#include "looplab/identities.hpp"
#include "looplab/probability.hpp"
#include "looplab/structure.hpp"

namespace looplab {

std::string to_string(ClaimId id) {
  switch (id) {
    case ClaimId::MoufangBound: return "MOUFANG_BOUND";
    case ClaimId::CcBound: return "CC_BOUND";
    case ClaimId::Index8: return "INDEX_8";
    case ClaimId::TwoGen: return "TWO_GEN";
    case ClaimId::MoufangThm: return "MOUFANG_THM";
    case ClaimId::Lagrange: return "LAGRANGE";
    case ClaimId::FixedPoint: return "FIXED_POINT";
  }
  return "?";
}

std::optional<ClaimId> claim_from_string(const std::string& s) {
  for (ClaimId id : all_claims())
    if (to_string(id) == s) return id;
  return std::nullopt;
}

const std::vector<ClaimId>& all_claims() {
  static const std::vector<ClaimId> ids = {
      ClaimId::MoufangBound, ClaimId::CcBound,  ClaimId::Index8,
      ClaimId::TwoGen,       ClaimId::MoufangThm, ClaimId::Lagrange,
      ClaimId::FixedPoint,
  };
  return ids;
}

bool has_nuclear_commutators(const LoopTable& t) {
  const ElementSet nuc = nucleus(t);
  const int n = t.order();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (!set_contains(nuc, commutator(t, x, y))) return false;
  return true;
}

namespace {

TheoremVerdict not_applicable(ClaimId id, std::string reason) {
  return TheoremVerdict{id, false, false, std::move(reason), std::nullopt};
}

}  // namespace

TheoremVerdict verify_moufang_bound(const LoopTable& t) {
  const ClaimId id = ClaimId::MoufangBound;
  if (!is_moufang(t).holds) return not_applicable(id, "not a Moufang loop");
  if (is_associative(t).holds) return not_applicable(id, "associative");
  if (!has_nuclear_commutators(t))
    return not_applicable(id, "commutators not nuclear");
  const Fraction p = p_assoc(t);
  const Fraction per_loop = moufang_bound_value(t);
  const Fraction limit(43, 64);
  std::ostringstream ev;
  ev << "p_assoc = " << p.to_string() << ", per-loop bound "
     << per_loop.to_string() << ", limit 43/64";
  if (p == limit) ev << " (sharp)";
  return TheoremVerdict{id, true, p <= limit, ev.str(), std::nullopt};
}

TheoremVerdict verify_cc_bound(const LoopTable& t) {
  const ClaimId id = ClaimId::CcBound;
  if (!is_cc(t).holds) return not_applicable(id, "not a CC loop");
  if (is_associative(t).holds) return not_applicable(id, "associative");
  const Fraction p = p_assoc(t);
  const Fraction per_loop = cc_bound_value(t);
  const Fraction limit(7, 8);
  std::ostringstream ev;
  ev << "p_assoc = " << p.to_string() << ", per-loop bound "
     << per_loop.to_string() << ", limit 7/8";
  if (p == limit) ev << " (sharp)";
  return TheoremVerdict{id, true, p <= limit, ev.str(), std::nullopt};
}

TheoremVerdict verify_index_corollary(const LoopTable& t) {
  const ClaimId id = ClaimId::Index8;
  if (!is_moufang(t).holds) return not_applicable(id, "not a Moufang loop");
  if (is_associative(t).holds) return not_applicable(id, "associative");
  const ElementSet nuc = nucleus(t);
  const CosetDecomposition dec = cosets(t, nuc, CosetSide::Left);
  std::ostringstream ev;
  ev << "|nucleus| = " << nuc.size() << ", cosets "
     << (dec.partitions ? "partition" : "do not partition") << ", index "
     << dec.index;
  return TheoremVerdict{id, true, dec.partitions && dec.index >= 8, ev.str(),
                        std::nullopt};
}

TheoremVerdict verify_two_generator_lemma(const LoopTable& t) {
  const ClaimId id = ClaimId::TwoGen;
  if (!is_moufang(t).holds) return not_applicable(id, "not a Moufang loop");
  if (is_associative(t).holds) return not_applicable(id, "associative");
  const ElementSet nuc = nucleus(t);
  int checked = 0;
  for (const ElementSet& a : all_subloops(t)) {
    const bool nuclear =
        std::includes(nuc.begin(), nuc.end(), a.begin(), a.end());
    if (!nuclear || !is_normal(t, a)) continue;
    ++checked;
    const Quotient q = quotient(t, a);
    const int m = q.table.order();
    for (Elem x = 0; x < m; ++x)
      for (Elem y = 0; y < m; ++y)
        if (static_cast<int>(subloop_closure(q.table, {x, y}).size()) == m) {
          std::ostringstream ev;
          ev << "quotient by nuclear subloop of order " << a.size()
             << " is generated by cosets " << x << ", " << y;
          return TheoremVerdict{id, true, false, ev.str(),
                                std::vector<Elem>{x, y}};
        }
  }
  std::ostringstream ev;
  ev << checked << " nuclear normal subloops, no 2-generated quotient";
  return TheoremVerdict{id, true, true, ev.str(), std::nullopt};
}

TheoremVerdict verify_moufang_theorem(const LoopTable& t, int max_order) {
  const ClaimId id = ClaimId::MoufangThm;
  const int n = t.order();
  if (n > max_order)
    throw Error(Error::Kind::OrderTooLarge,
                "verify_moufang_theorem supports order <= " +
                    std::to_string(max_order) + ", got " + std::to_string(n));
  if (!is_moufang(t).holds) return not_applicable(id, "not a Moufang loop");
  std::map<std::array<Elem, 3>, bool> closed_ok;
  std::int64_t trivial = 0;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        if (associator(t, x, y, z) != t.identity()) continue;
        ++trivial;
        std::array<Elem, 3> key{x, y, z};
        std::sort(key.begin(), key.end());
        auto [it, fresh] = closed_ok.try_emplace(key, false);
        if (fresh)
          it->second = associative_on(t, subloop_closure(t, {x, y, z}));
        if (!it->second) {
          std::ostringstream ev;
          ev << "triple (" << x << "," << y << "," << z
             << ") associates but generates a nonassociative subloop";
          return TheoremVerdict{id, true, false, ev.str(),
                                std::vector<Elem>{x, y, z}};
        }
      }
  std::ostringstream ev;
  ev << trivial << " associating triples, all closures associative";
  return TheoremVerdict{id, true, true, ev.str(), std::nullopt};
}

TheoremVerdict verify_lagrange(const LoopTable& t, int max_order) {
  const ClaimId id = ClaimId::Lagrange;
  const int n = t.order();
  if (n > max_order)
    throw Error(Error::Kind::OrderTooLarge,
                "verify_lagrange supports order <= " +
                    std::to_string(max_order) + ", got " + std::to_string(n));
  const bool moufang = is_moufang(t).holds;
  if (!moufang && !is_cc(t).holds)
    return not_applicable(id, "neither Moufang nor CC");
  const std::vector<ElementSet> subs = all_subloops(t, max_order);
  std::ostringstream orders;
  for (const ElementSet& h : subs) {
    if (n % static_cast<int>(h.size()) != 0) {
      std::ostringstream ev;
      ev << "subloop of order " << h.size() << " does not divide " << n;
      return TheoremVerdict{id, true, false, ev.str(), h};
    }
    orders << " " << h.size();
  }
  std::ostringstream ev;
  ev << subs.size() << " subloops, orders" << orders.str();
  return TheoremVerdict{id, true, true, ev.str(), std::nullopt};
}

TheoremVerdict verify_fixed_point_lemma(const LoopTable& t) {
  const ClaimId id = ClaimId::FixedPoint;
  if (!is_moufang(t).holds)
    return not_applicable(id, "loop is not Moufang");
  if (!has_nuclear_commutators(t))
    return not_applicable(id, "commutators not nuclear");
  const int n = t.order();
  auto failed = [&](Elem x, Elem y, const char* what) {
    std::ostringstream ev;
    ev << "pair (" << x << "," << y << "): " << what;
    return TheoremVerdict{id, true, false, ev.str(), std::vector<Elem>{x, y}};
  };
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const PseudoAutomorphism p = pseudo_L(t, x, y);
      if (p.companion != commutator(t, y, x))
        return failed(x, y, "companion is not [y,x]");
      if (!is_pseudo_automorphism(t, p.map, p.companion))
        return failed(x, y, "pseudo-automorphism law fails");
      ElementSet fixed;
      for (Elem z = 0; z < n; ++z)
        if (p.map[z] == z) fixed.push_back(z);
      if (fixed != partial_set(t, x, y))
        return failed(x, y, "fixed points differ from the partial set");
      if (!is_subloop(t, fixed))
        return failed(x, y, "fixed-point set is not a subloop");
      for (Elem z = 0; z < n; ++z)
        if (t.mul(p.map[z], associator(t, z, y, x)) != z)
          return failed(x, y, "L(x,y)(z)*[z,y,x] != z");
    }
  std::ostringstream ev;
  ev << n * n << " pairs, all four checks pass";
  return TheoremVerdict{id, true, true, ev.str(), std::nullopt};
}

TheoremVerdict verify_claim(const LoopTable& t, ClaimId id) {
  switch (id) {
    case ClaimId::MoufangBound: return verify_moufang_bound(t);
    case ClaimId::CcBound: return verify_cc_bound(t);
    case ClaimId::Index8: return verify_index_corollary(t);
    case ClaimId::TwoGen: return verify_two_generator_lemma(t);
    case ClaimId::MoufangThm: return verify_moufang_theorem(t);
    case ClaimId::Lagrange: return verify_lagrange(t);
    case ClaimId::FixedPoint: return verify_fixed_point_lemma(t);
  }
  throw Error(Error::Kind::Precondition, "unknown claim id");
}

std::vector<TheoremVerdict> verify_all(const LoopTable& t) {
  std::vector<TheoremVerdict> out;
  out.reserve(all_claims().size());
  for (ClaimId id : all_claims()) out.push_back(verify_claim(t, id));
  return out;
}

}  // namespace looplab
