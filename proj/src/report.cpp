#include "looplab/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "looplab/error.hpp"
#include "looplab/io.hpp"
#include "looplab/structure.hpp"

namespace looplab {

AnalysisReport analyze(const LoopTable& t, const std::string& source) {
  AnalysisReport r;
  r.source = source;
  r.order = t.order();
  r.table_text = format_table(t);
  r.hash = content_hash_hex(t.magma());
  r.identities = {is_associative(t), is_moufang(t), is_cc(t),
                  is_alternative(t), is_diassociative(t)};
  r.nucleus_left = static_cast<int>(nucleus(t, NucleusKind::Left).size());
  r.nucleus_middle = static_cast<int>(nucleus(t, NucleusKind::Middle).size());
  r.nucleus_right = static_cast<int>(nucleus(t, NucleusKind::Right).size());
  const ElementSet nuc = nucleus(t, NucleusKind::Full);
  r.nucleus_full = static_cast<int>(nuc.size());
  r.index = cosets(t, nuc, CosetSide::Left).index;
  r.nuclear_commutators = has_nuclear_commutators(t);
  r.p_comm = p_comm(t);
  r.p_assoc = p_assoc(t);
  r.decomposition = p_assoc_decomposed(t);
  for (ClaimId id : all_claims()) {
    try {
      r.claims.push_back(verify_claim(t, id));
    } catch (const Error& e) {
      if (e.kind() != Error::Kind::OrderTooLarge) throw;
      r.claims.push_back(
          TheoremVerdict{id, false, false, std::string("skipped: ") + e.what(),
                         std::nullopt});
    }
  }
  return r;
}

namespace {

std::string witness_text(const std::vector<Elem>& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(w[i]);
  }
  return out + ")";
}

std::string approx(const Fraction& f) {
  std::ostringstream os;
  os << f.to_string();
  if (f.den() != 1) os << " (~" << std::setprecision(6) << f.to_double() << ")";
  return os.str();
}

}  // namespace

std::string to_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "source:         " << r.source << "\n";
  os << "content hash:   " << r.hash << "\n";
  os << "order:          " << r.order << "\n";
  os << "classification: loop\n";
  os << "identities:\n";
  for (const IdentityVerdict& v : r.identities) {
    os << "  " << std::left << std::setw(14) << v.name
       << (v.holds ? "holds" : "fails");
    if (v.witness)
      os << "  witness " << witness_text(*v.witness) << " violates "
         << v.violated;
    os << "\n";
  }
  os << "nucleus:        full " << r.nucleus_full << " (left " << r.nucleus_left
     << ", middle " << r.nucleus_middle << ", right " << r.nucleus_right
     << "), index " << r.index << "\n";
  os << "nuclear [G,G]:  " << (r.nuclear_commutators ? "yes" : "no") << "\n";
  os << "p_comm:         " << approx(r.p_comm) << "\n";
  os << "p_assoc:        " << approx(r.p_assoc) << "\n";
  const TripleCountBreakdown& d = r.decomposition;
  os << "decomposition:  " << d.case1 << " + " << d.case2 << " + " << d.case3
     << " = " << (d.case1 + d.case2 + d.case3) << " of " << d.total
     << " triples associate\n";
  os << "claims:\n";
  for (const TheoremVerdict& c : r.claims) {
    os << "  " << std::left << std::setw(14) << to_string(c.id);
    if (!c.applicable)
      os << "not applicable (" << c.evidence << ")";
    else if (c.verified)
      os << "verified       " << c.evidence;
    else
      os << "FALSIFIED      " << c.evidence;
    os << "\n";
  }
  return os.str();
}

std::string to_json(const AnalysisReport& r, int indent) {
  using nlohmann::json;
  json j;
  j["source"] = r.source;
  j["hash"] = r.hash;
  j["order"] = r.order;
  j["classification"] = "loop";
  j["table"] = r.table_text;
  json ids = json::array();
  for (const IdentityVerdict& v : r.identities) {
    json e;
    e["name"] = v.name;
    e["holds"] = v.holds;
    if (v.witness) {
      e["witness"] = *v.witness;
      e["violated"] = v.violated;
    }
    ids.push_back(std::move(e));
  }
  j["identities"] = std::move(ids);
  j["nucleus_size"] = r.nucleus_full;
  j["nucleus_sizes"] = {{"left", r.nucleus_left},
                        {"middle", r.nucleus_middle},
                        {"right", r.nucleus_right},
                        {"full", r.nucleus_full}};
  j["index"] = r.index;
  j["nuclear_commutators"] = r.nuclear_commutators;
  j["p_comm"] = {{"num", r.p_comm.num()}, {"den", r.p_comm.den()}};
  j["p_assoc"] = {{"num", r.p_assoc.num()}, {"den", r.p_assoc.den()}};
  j["decomposition"] = {{"case1", r.decomposition.case1},
                        {"case2", r.decomposition.case2},
                        {"case3", r.decomposition.case3},
                        {"total", r.decomposition.total}};
  json claims = json::array();
  for (const TheoremVerdict& c : r.claims) {
    json e;
    e["id"] = to_string(c.id);
    e["applicable"] = c.applicable;
    e["verified"] = c.applicable ? json(c.verified) : json(nullptr);
    e["evidence"] = c.evidence;
    if (c.witness) e["witness"] = *c.witness;
    claims.push_back(std::move(e));
  }
  j["claims"] = std::move(claims);
  return j.dump(indent) + "\n";
}

}  // namespace looplab
