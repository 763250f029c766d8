#pragma once

#include <string>
#include <vector>

#include "looplab/fraction.hpp"
#include "looplab/identities.hpp"
#include "looplab/loop_table.hpp"
#include "looplab/probability.hpp"
#include "looplab/theorems.hpp"

namespace looplab {

/// Everything `analyze` knows about one loop. `table_text` is the canonical
/// rendering of the input, so a JSON report round-trips: re-parsing it gives
/// a loop with the same content hash.
struct AnalysisReport {
  std::string source;
  std::string hash;
  int order = 0;
  std::vector<IdentityVerdict> identities;
  int nucleus_left = 0;
  int nucleus_middle = 0;
  int nucleus_right = 0;
  int nucleus_full = 0;
  int index = 0;  // [G : full nucleus]; 0 when the cosets fail to partition
  bool nuclear_commutators = false;
  Fraction p_comm;
  Fraction p_assoc;
  TripleCountBreakdown decomposition;
  std::vector<TheoremVerdict> claims;
  std::string table_text;
};

/// Runs the full battery on a validated loop. Theorem checks that refuse the
/// order (OrderTooLarge) are reported as inapplicable rather than thrown, so
/// analysis works at any order the scans can handle.
AnalysisReport analyze(const LoopTable& t, const std::string& source);

std::string to_text(const AnalysisReport& r);
std::string to_json(const AnalysisReport& r, int indent = 2);

}  // namespace looplab
