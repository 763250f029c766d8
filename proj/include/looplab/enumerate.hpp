#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "looplab/fraction.hpp"
#include "looplab/loop_table.hpp"

namespace looplab {

enum class Filter { Moufang, Cc, Nonassociative, NuclearCommutators };

std::string to_string(Filter f);

/// Accepts "moufang", "cc", "nonassociative", "nuclear_commutators"; throws
/// Error(UnknownFilter) otherwise.
Filter parse_filter(const std::string& name);

struct EnumerationJob {
  int order = 1;
  std::vector<Filter> filters;
  bool up_to_iso = false;
  std::optional<std::int64_t> limit;
  int threads = 0;  // worker cap; 0 means all available cores
};

struct FilterStage {
  std::string name;
  std::int64_t survivors = 0;
};

/// Per-stage counts for the enumeration summary. With an early stop (limit or
/// sink refusal) the counts cover the work units merged up to the stop, which
/// is the same set for every thread count.
struct EnumerationStats {
  std::int64_t generated = 0;        // completed normalized tables
  std::vector<FilterStage> stages;   // survivors after each filter, in order
  std::int64_t emitted = 0;
};

/// Streams every normalized loop of the given order (row 0 and column 0 are
/// the identity permutation) passing all filters, in lexicographic table
/// order. With up_to_iso, exactly the tables that are their own canonical
/// form are emitted, i.e. the lexicographically least member of each
/// isomorphism class. The sink returns false to stop early.
///
/// Unfiltered search is capped at order 8; the moufang filter prunes during
/// search (identity (1) on every fully-determined instance at each completed
/// row, for orders >= 7) and raises the cap to 11. Throws
/// Error(OrderTooLarge) or Error(InvalidOrder) accordingly.
///
/// Work splits across threads on the first free row's contents; results are
/// merged back in lexicographic order, so output is identical for any thread
/// count.
void enumerate(const EnumerationJob& job,
               const std::function<bool(const LoopTable&)>& sink,
               EnumerationStats* stats = nullptr);

std::vector<LoopTable> enumerate_all(const EnumerationJob& job);

/// Serialized lexicographically least table over all relabelings that send
/// the identity to 0 (the canonical representative of the isomorphism
/// class). Two loops have equal canonical forms iff they are isomorphic.
/// Branch-and-bound over partial relabelings; desk scale (n <= 16).
std::string canonical_form(const LoopTable& t, int max_order = 16);

struct CounterexampleHit {
  LoopTable table;
  Fraction p;
};

/// All nonassociative Moufang loops of the given order (up to isomorphism,
/// nuclear commutators NOT required) whose association probability exceeds
/// the bound. An empty result is the meaningful negative: no counterexample
/// at this order.
std::vector<CounterexampleHit> counterexample_search(int order,
                                                     const Fraction& bound,
                                                     int threads = 0);

}  // namespace looplab
